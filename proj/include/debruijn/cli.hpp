#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace debruijn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Bad verb, unknown flag, missing or inconsistent options.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text.
class HelpRequested : public UsageError {
 public:
  using UsageError::UsageError;
};

/// A validated invocation. Only the fields relevant to `verb` are set.
struct Command {
  std::string verb;  ///< gen | check | graph | families | reverse | primpoly | count

  std::string algo = "gpo";
  std::optional<std::string> function;
  std::optional<std::string> init;
  std::optional<std::string> seq;
  std::optional<std::string> poly;
  std::optional<std::string> seed;  ///< --h for F1
  std::optional<std::string> family;
  std::optional<int> n, t, m, kind, k, l;
  std::size_t cap = 0;
  std::vector<std::string> highlight;
  std::string format = "plain";
  bool trace = false;
  bool pretty = false;
  bool strict = false;
  bool verbose = false;
  bool all_witnesses = false;
  bool allow_t0 = false;
  bool table = false;
};

/// argv excludes the program name. Throws UsageError.
Command parse_args(const std::vector<std::string>& args);

/// Runs a validated command; returns the process exit code.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + execute with usage errors mapped to exit code 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace debruijn::cli
