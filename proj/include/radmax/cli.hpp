#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace radmax {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNumerical = 2;

/// Malformed command line or option value.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "a:b:step" (arithmetic), "a:b:xF" (geometric), "a,b,c" or a single value.
std::vector<double> parse_range(const std::string& text);

/// parse_range restricted to positive integers.
std::vector<long> parse_dimension_range(const std::string& text);

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radmax
