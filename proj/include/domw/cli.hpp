#ifndef DOMW_CLI_HPP
#define DOMW_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace domw::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kInvalidInput = 1,
  kTheoremViolation = 2,
  kTooLarge = 3,
};

/// Runs one command line (without the program name). Payloads go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace domw::cli

#endif  // DOMW_CLI_HPP
