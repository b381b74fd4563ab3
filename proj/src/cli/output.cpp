#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "chebdense/cli.hpp"

namespace chebdense::cli {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

json cell_json(const Cell& cell) {
  return std::visit([](const auto& v) -> json { return v; }, cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  out << json{{"columns", table.columns}, {"rows", std::move(rows)}}.dump() << '\n';
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

std::string report_json(const std::vector<IdentityReport>& reports, const VerifyBounds& bounds) {
  const auto counterexample = [](const std::optional<Counterexample>& c) -> json {
    if (!c) return nullptr;
    return json{{"n", c->n}, {"m", c->m}, {"detail", c->detail}};
  };
  json list = json::array();
  bool pass = true;
  for (const auto& r : reports) {
    pass = pass && r.passed();
    json jr{{"identity", r.identity},
            {"range", {r.lo, r.hi}},
            {"m_values", r.m_values},
            {"failures", r.failures},
            {"counterexample", counterexample(r.first)},
            {"flagged", r.flagged},
            {"first_flagged", counterexample(r.first_flagged)}};
    if (!r.note.empty()) jr["note"] = r.note;
    list.push_back(std::move(jr));
  }
  json doc{{"status", pass ? "pass" : "fail"},
           {"bounds",
            {{"lambda_oracle", bounds.lambda_oracle},
             {"liouville", bounds.liouville},
             {"multiplicative", bounds.multiplicative},
             {"exact_identities", bounds.exact_identities},
             {"duality", bounds.duality},
             {"dirichlet", bounds.dirichlet}}},
           {"reports", std::move(list)}};
  return doc.dump(2);
}

}  // namespace chebdense::cli
