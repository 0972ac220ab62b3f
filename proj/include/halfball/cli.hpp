#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace halfball::cli {

enum class Format { Json, Csv, Svg };

struct RunConfig {
  std::string subcommand;
  std::string space = "h2";
  std::string family;
  std::uint64_t seed = 1;
  std::int64_t samples = 0;  // 0 selects the subcommand's default
  std::string grid;          // "n" or "n1,n2,..."
  std::string window;        // "lo,hi,u_lo,u_hi"
  std::string alpha_ladder;
  std::string out_dir;
  Format format = Format::Json;
  std::vector<double> radii;  // empty: subcommand default
  double nu = 0.0;  // 0: take ν from the space
  int levels = 4;
  std::vector<double> p_values{1.0, 2.0, 3.0};
  std::string figure = "all";
  std::string function = "all";
  int families = 0;
  std::vector<double> z{1.5, 2.0};
  int level = 0;
};

/// "2^-3..2^-10" (every power in between), "2^-4", or a comma list of numbers.
std::vector<double> parse_alpha_ladder(const std::string& spec);

/// Parses arguments (argv[0] excluded) and runs. Exit status: 0 when every
/// assertion passes, 1 with a JSON failure list on `err` otherwise, 2 on
/// usage or runtime errors.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace halfball::cli
