#include <ostream>

#include <omp.h>

#include "chebdense/cli.hpp"
#include "chebdense/density.hpp"
#include "chebdense/errors.hpp"

namespace chebdense::cli {

namespace {

StreamOptions stream_options(const RunConfig& cfg) {
  return StreamOptions{cfg.segment_size, cfg.threads};
}

void progress(const RunConfig& cfg, std::ostream& err, const std::string& what) {
  if (cfg.progress) err << "[" << cfg.subcommand << "] " << what << '\n';
}

std::string describe(const Counterexample& c) {
  return "n = " + std::to_string(c.n) + ", m = " + std::to_string(c.m) + ": " + c.detail;
}

bool galois_mode(const RunConfig& cfg) {
  if (cfg.mode.empty()) return !cfg.context.empty();
  if (cfg.mode == "galois") return true;
  if (cfg.mode == "progression") return false;
  throw ConfigError("unknown density mode '" + cfg.mode + "'");
}

void append_series(Table& table, const std::vector<DensitySeries>& series) {
  if (series.empty()) return;
  // Grouped by checkpoint, classes in context order within a group.
  for (std::size_t i = 0; i < series.front().points.size(); ++i) {
    for (const auto& s : series) {
      const DensityPoint& p = s.points[i];
      table.rows.push_back({p.x, s.class_id, p.partial_sum, p.target, p.abs_err});
    }
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    if (cfg.subcommand == "verify") return run_verify(cfg, out, err);
    if (cfg.subcommand == "density") return run_density(cfg, out, err);
    if (cfg.subcommand == "pnt") return run_pnt(cfg, out, err);
    if (cfg.subcommand == "summatory") return run_summatory(cfg, out, err);
    if (cfg.subcommand == "pm-stats") return run_pm_stats(cfg, out, err);
    if (cfg.subcommand == "frobenius") return run_frobenius(cfg, out, err);
    if (cfg.subcommand == "sieve-dump") return run_sieve_dump(cfg, out, err);
    throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const OutOfRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.bounds = cfg.bounds;
  options.corrupt_lambda_at = cfg.corrupt_lambda_at;
  progress(cfg, err, "running identity suites up to " + std::to_string(cfg.bounds.max()));
  const auto reports = run_verification_suite(options);
  out << report_json(reports, cfg.bounds) << '\n';

  int status = kExitOk;
  for (const auto& r : reports) {
    if (r.flagged > 0 && r.first_flagged) {
      err << "note: " << r.identity << ": " << r.flagged << " flagged, first at "
          << describe(*r.first_flagged) << '\n';
    }
    if (!r.passed()) {
      if (status == kExitOk && r.first) {
        err << "FAIL " << r.identity << ": " << r.failures << " failures, first at "
            << describe(*r.first) << '\n';
      }
      status = kExitVerifyFailed;
    }
  }
  return status;
}

int run_density(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto options = stream_options(cfg);
  std::vector<DensitySeries> series;
  if (galois_mode(cfg)) {
    if (cfg.context.empty()) throw ConfigError("galois mode needs --ctx");
    const GaloisContext ctx = resolve_context(cfg.context);
    progress(cfg, err, "context " + ctx.label() + ", X = " + std::to_string(cfg.limit));
    if (cfg.class_id == "all") {
      series = chebotarev_density_all(ctx, cfg.m, cfg.limit, cfg.checkpoints, options);
    } else {
      series.push_back(
          chebotarev_density(ctx, cfg.class_id, cfg.m, cfg.limit, cfg.checkpoints, options));
    }
  } else {
    progress(cfg, err, "progression " + std::to_string(cfg.l) + " mod " + std::to_string(cfg.k) +
                           ", X = " + std::to_string(cfg.limit));
    series.push_back(
        progression_density(cfg.m, cfg.k, cfg.l, cfg.limit, cfg.checkpoints, options));
  }
  Table table{{"x", "class_id", "partial_sum", "target", "abs_err"}, {}};
  append_series(table, series);
  write_table(table, cfg.format, out);
  progress(cfg, err, "done");
  return kExitOk;
}

int run_pnt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  progress(cfg, err, "X = " + std::to_string(cfg.limit));
  Table table{{"x", "L", "A"}, {}};
  for (const auto& p : pnt_partial_sums(cfg.m, cfg.limit, cfg.checkpoints, stream_options(cfg))) {
    table.rows.push_back({p.x, p.lambda_over_n, p.mu_over_n});
  }
  write_table(table, cfg.format, out);
  return kExitOk;
}

int run_summatory(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  progress(cfg, err, "X = " + std::to_string(cfg.limit));
  Table table{{"x", "Lambda", "Lambda_over_sqrt_x"}, {}};
  for (const auto& p : summatory_lambda(cfg.m, cfg.limit, cfg.checkpoints, stream_options(cfg))) {
    table.rows.push_back({p.x, p.value, p.normalized});
  }
  write_table(table, cfg.format, out);
  return kExitOk;
}

int run_pm_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  progress(cfg, err, "X = " + std::to_string(cfg.limit));
  const auto report = pm_mismatch(cfg.m, cfg.limit, cfg.checkpoints, stream_options(cfg));
  Table table{{"x", "e", "e_over_x", "H"}, {}};
  for (const auto& p : report.points) table.rows.push_back({p.x, p.count, p.fraction, p.harmonic});
  write_table(table, cfg.format, out);
  progress(cfg, err, "C_m estimate (H at final checkpoint) = " + format_double(report.c_m_estimate));
  return kExitOk;
}

int run_frobenius(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GaloisContext ctx = resolve_context(cfg.context);
  std::vector<u64> primes;
  if (cfg.prime) {
    if (!oracle::is_prime(*cfg.prime)) {
      throw PreconditionError("-p " + std::to_string(*cfg.prime) + " is not prime");
    }
    primes.push_back(*cfg.prime);
  } else {
    if (cfg.limit > kMaxSegmentValue) throw PreconditionError("frobenius -X must be below 2^32");
    for (const auto p : primes_up_to(cfg.limit)) primes.push_back(p);
  }
  progress(cfg, err, "classifying " + std::to_string(primes.size()) + " primes");
  Table table{{"p", "cycle_type", "class_id"}, {}};
  for (const u64 p : primes) {
    const Classification c = classify_prime(ctx, p);
    const std::string cycle = c.cycle_type ? c.cycle_type->to_string() : "none";
    const std::string id = c.is_excluded()
                               ? "EXCLUDED:" + std::string(to_string(*c.excluded))
                               : ctx.classes()[static_cast<std::size_t>(c.class_index)].id;
    table.rows.push_back({p, cycle, id});
  }
  write_table(table, cfg.format, out);
  return kExitOk;
}

int run_sieve_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_valid_m(cfg.m);
  progress(cfg, err, "X = " + std::to_string(cfg.limit));
  const SpfTable spf = build_spf(cfg.limit, MemoryBudget::from_env());
  Table table{{"n", "spf", "mu", "lambda", "big_omega", "P", "P_m"}, {}};
  for (u64 n = 1; n <= cfg.limit; ++n) {
    const Factorization f = factorize(n, spf);
    table.rows.push_back({n, spf[n], static_cast<std::int64_t>(mu_of(f)),
                          static_cast<std::int64_t>(lambda_m_of(f, cfg.m)),
                          static_cast<u64>(big_omega_of(f)), big_p_of(f), big_p_m_of(f, cfg.m)});
  }
  write_table(table, cfg.format, out);
  return kExitOk;
}

}  // namespace chebdense::cli
