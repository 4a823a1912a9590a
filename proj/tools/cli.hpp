#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace hh::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // bad flags, bad input, violated parameter constraints
  kNoSample = 3,  // the sketch (or oracle) had nothing to report
};

struct RunSpec {
  std::string subcommand;
  double epsilon = 0.1;
  std::optional<double> phi;
  double delta = 0.1;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> m;
  std::uint64_t seed = 0;
  std::optional<double> scale;
  std::string input = "-";
  bool exact = false;
  std::uint64_t trials = 20;
  std::string algorithm = "list-hh";  // verify target
};

/// Malformed input line; `line` is 1-based.
class InputError : public std::runtime_error {
 public:
  InputError(std::uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

/// Executes a parsed spec and returns the JSON report. `in` is read when
/// spec.input is "-". Throws std::invalid_argument, InputError or the
/// sketch error types.
nlohmann::ordered_json execute(const RunSpec& spec, std::istream& in);

/// Full command line handling: parses args (without the program name),
/// runs, prints JSON to `out` and diagnostics to `err`, returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hh::cli
