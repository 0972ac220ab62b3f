#pragma once

// Structured experiment output: named tables plus checked assertions,
// serialisable to JSON and CSV.

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace halfball {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  /// Numeric column as doubles (bools and ints are converted).
  std::vector<double> column(std::string_view col) const;
};

struct Assertion {
  std::string name;
  double bound = 0.0;
  double observed = 0.0;
  bool pass = false;
};

struct ExperimentReport {
  std::string name;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;
  std::deque<Table> tables;  // deque keeps add_table references valid
  std::vector<Assertion> assertions;

  Table& add_table(std::string table_name, std::vector<std::string> columns);
  const Table& table(std::string_view table_name) const;

  /// Records observed <= bound.
  bool expect_le(std::string assertion, double observed, double bound);
  /// Records observed >= bound.
  bool expect_ge(std::string assertion, double observed, double bound);
  /// Records observed < bound.
  bool expect_lt(std::string assertion, double observed, double bound);
  /// Records observed > bound.
  bool expect_gt(std::string assertion, double observed, double bound);
  /// Records a boolean outcome as observed = 1/0 against bound 1.
  bool expect_true(std::string assertion, bool ok);

  bool all_pass() const;
  std::vector<Assertion> failures() const;
  /// Appends another report's tables and assertions, prefixing their names.
  void merge(const ExperimentReport& other, std::string_view prefix);
};

std::string to_json(const ExperimentReport& report, std::string_view version, int indent = 2);
std::string to_json_reports(const std::vector<ExperimentReport>& reports, std::string_view version,
                            int indent = 2);
std::string failures_json(const std::vector<Assertion>& failures);
std::string to_csv(const Table& table);
std::string format_cell(const Cell& cell);

}  // namespace halfball
