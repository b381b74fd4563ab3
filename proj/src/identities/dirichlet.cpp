#include <cmath>
#include <numbers>
#include <sstream>

#include "chebdense/errors.hpp"
#include "chebdense/identities.hpp"
#include "chebdense/summation.hpp"

namespace chebdense {

double truncated_dirichlet(const ValueTable& values, double s, u64 limit) {
  if (!(s > 1.0)) throw PreconditionError("Dirichlet series needs s > 1 to converge");
  if (limit > values.limit()) throw OutOfRangeError("truncation point beyond value table");
  SumAccumulator acc;
  for (u64 n = 1; n <= limit; ++n) {
    if (values[n] == 0) continue;
    acc.add(values[n] * std::pow(static_cast<double>(n), -s));
  }
  return acc.value();
}

double zeta_reference(double s) {
  if (!(s > 1.0)) throw PreconditionError("zeta_reference needs s > 1");
  constexpr double pi = std::numbers::pi;
  if (s == 2.0) return pi * pi / 6.0;
  if (s == 4.0) return std::pow(pi, 4) / 90.0;
  if (s == 6.0) return std::pow(pi, 6) / 945.0;
  if (s == 8.0) return std::pow(pi, 8) / 9450.0;
  // Direct sum to M, then Euler-Maclaurin for the tail.
  constexpr u64 M = 100000;
  SumAccumulator acc;
  for (u64 n = M; n >= 1; --n) acc.add(std::pow(static_cast<double>(n), -s));
  const double m = static_cast<double>(M);
  acc.add(std::pow(m, 1.0 - s) / (s - 1.0));
  acc.add(-0.5 * std::pow(m, -s));
  acc.add(s * std::pow(m, -s - 1.0) / 12.0);
  acc.add(-s * (s + 1.0) * (s + 2.0) * std::pow(m, -s - 3.0) / 720.0);
  return acc.value();
}

double dirichlet_tail_bound(double s, u64 limit) {
  if (!(s > 1.0)) throw PreconditionError("tail bound needs s > 1");
  return std::pow(static_cast<double>(limit), 1.0 - s) / (s - 1.0);
}

IdentityReport check_dirichlet(const ValueTable& values, double s, u64 limit, double target,
                               std::string name) {
  IdentityReport report;
  report.identity = std::move(name);
  report.lo = 1;
  report.hi = limit;
  const double sum = truncated_dirichlet(values, s, limit);
  const double err = std::abs(sum - target);
  const double bound = dirichlet_tail_bound(s, limit);
  std::ostringstream os;
  os.precision(17);
  os << "s=" << s << " partial=" << sum << " target=" << target << " |err|=" << err
     << " tail_bound=" << bound;
  report.note = os.str();
  if (err > bound) report.record_failure(limit, 0, report.note);
  return report;
}

}  // namespace chebdense
