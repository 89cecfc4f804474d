#ifndef OUPAIRS_CLI_HPP
#define OUPAIRS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace oupairs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

/**
 * @brief Entry point of the `oupairs` command.
 *
 * args excludes the program name. Tables go to `out` (or the --output file),
 * diagnostics to `err` as single lines. Returns 0 on success, 1 on invalid
 * input, 2 on numerical failure.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oupairs::cli

#endif  // OUPAIRS_CLI_HPP
