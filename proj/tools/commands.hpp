#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

/// Bad flags or flag combinations; exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sweep {
  double start = 0, stop = 0, step = 0;
  std::vector<double> values() const;
};

struct RunConfig {
  std::string command;
  std::optional<double> s;
  std::optional<Sweep> sweep;
  std::optional<double> l;
  std::vector<int> grid;
  std::string format;  // empty: command default
  std::string out_path;
  bool check = false;
  int ff = 0;  // 0: both
  std::string form = "theorem";
  std::string rep = "theorem";
  std::map<std::string, double> tolerances;
};

Sweep parse_sweep(const std::string& text);
std::vector<int> parse_grid(const std::string& text);

/// Validates the config and produces the command output.
std::string run(const RunConfig& config);

}  // namespace cli
