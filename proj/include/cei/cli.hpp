#ifndef CEI_CLI_HPP
#define CEI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cei::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kValidation = 2,
  kMismatch = 3,
};

/// Runs one command line (without the program name). Graph text is read from
/// --graph when given, otherwise from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cei::cli

#endif  // CEI_CLI_HPP
