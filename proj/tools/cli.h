#ifndef METRIC_COMPLETER_TOOLS_CLI_H_
#define METRIC_COMPLETER_TOOLS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace metric_completer::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCompletionFailed = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitPrecondition = 4;

struct RunConfig {
  std::string command;
  std::optional<int> delta;
  std::optional<int> k;
  std::optional<int> c;
  std::optional<int> magic;
  std::string input_path;
  std::string output_path;
  std::string format = "text";
  std::string method = "exhaustive";
  int n = 3;
  bool verify = false;
  double oracle_budget = 1e8;
  double sequence_budget = 1e7;
};

// Runs the tool on `args` (without the program name), writing to out/err.
// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace metric_completer::cli

#endif  // METRIC_COMPLETER_TOOLS_CLI_H_
