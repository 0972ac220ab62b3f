#include "halfball/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace halfball {

namespace {

using nlohmann::ordered_json;

ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
        }
        return v;
      },
      cell);
}

ordered_json report_json(const ExperimentReport& r, std::string_view version) {
  ordered_json meta;
  meta["name"] = r.name;
  meta["seed"] = r.seed;
  meta["version"] = std::string(version);
  meta["config"] = ordered_json::object();
  for (const auto& [k, v] : r.config) meta["config"][k] = v;

  ordered_json tables = ordered_json::array();
  for (const auto& t : r.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json jr = ordered_json::array();
      for (const auto& c : row) jr.push_back(cell_json(c));
      rows.push_back(std::move(jr));
    }
    tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}});
  }

  ordered_json asserts = ordered_json::array();
  for (const auto& a : r.assertions) {
    asserts.push_back({{"name", a.name},
                       {"bound", cell_json(a.bound)},
                       {"observed", cell_json(a.observed)},
                       {"pass", a.pass}});
  }
  return {{"meta", std::move(meta)}, {"tables", std::move(tables)}, {"assertions", std::move(asserts)}};
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("table " + name + ": row width does not match the column count");
  }
  rows.push_back(std::move(row));
}

std::vector<double> Table::column(std::string_view col) const {
  std::size_t idx = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == col) idx = i;
  }
  if (idx == columns.size()) throw std::invalid_argument("table " + name + ": no column " + std::string(col));
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.push_back(std::visit(
        [](const auto& v) -> double {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::string>) {
            return std::numeric_limits<double>::quiet_NaN();
          } else {
            return static_cast<double>(v);
          }
        },
        row[idx]));
  }
  return out;
}

Table& ExperimentReport::add_table(std::string table_name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(table_name), std::move(columns), {}});
  return tables.back();
}

const Table& ExperimentReport::table(std::string_view table_name) const {
  for (const auto& t : tables) {
    if (t.name == table_name) return t;
  }
  throw std::invalid_argument("report " + name + ": no table " + std::string(table_name));
}

bool ExperimentReport::expect_le(std::string assertion, double observed, double bound) {
  const bool ok = observed <= bound;
  assertions.push_back({std::move(assertion), bound, observed, ok});
  return ok;
}

bool ExperimentReport::expect_ge(std::string assertion, double observed, double bound) {
  const bool ok = observed >= bound;
  assertions.push_back({std::move(assertion), bound, observed, ok});
  return ok;
}

bool ExperimentReport::expect_lt(std::string assertion, double observed, double bound) {
  const bool ok = observed < bound;
  assertions.push_back({std::move(assertion), bound, observed, ok});
  return ok;
}

bool ExperimentReport::expect_gt(std::string assertion, double observed, double bound) {
  const bool ok = observed > bound;
  assertions.push_back({std::move(assertion), bound, observed, ok});
  return ok;
}

bool ExperimentReport::expect_true(std::string assertion, bool ok) {
  assertions.push_back({std::move(assertion), 1.0, ok ? 1.0 : 0.0, ok});
  return ok;
}

bool ExperimentReport::all_pass() const {
  for (const auto& a : assertions) {
    if (!a.pass) return false;
  }
  return true;
}

std::vector<Assertion> ExperimentReport::failures() const {
  std::vector<Assertion> out;
  for (const auto& a : assertions) {
    if (!a.pass) out.push_back(a);
  }
  return out;
}

void ExperimentReport::merge(const ExperimentReport& other, std::string_view prefix) {
  const std::string p = prefix.empty() ? "" : std::string(prefix) + ".";
  for (auto t : other.tables) {
    t.name = p + t.name;
    tables.push_back(std::move(t));
  }
  for (auto a : other.assertions) {
    a.name = p + a.name;
    assertions.push_back(std::move(a));
  }
}

std::string to_json(const ExperimentReport& report, std::string_view version, int indent) {
  return report_json(report, version).dump(indent) + "\n";
}

std::string to_json_reports(const std::vector<ExperimentReport>& reports, std::string_view version,
                            int indent) {
  if (reports.size() == 1) return to_json(reports.front(), version, indent);
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, version));
  return arr.dump(indent) + "\n";
}

std::string failures_json(const std::vector<Assertion>& failures) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : failures) {
    arr.push_back({{"name", a.name}, {"bound", cell_json(a.bound)}, {"observed", cell_json(a.observed)}});
  }
  return ordered_json{{"failures", std::move(arr)}}.dump() + "\n";
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          std::ostringstream os;
          os << std::setprecision(17) << v;
          return os.str();
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string q = "\"";
          for (char c : v) {
            if (c == '"') q += '"';
            q += c;
          }
          return q + "\"";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace halfball
