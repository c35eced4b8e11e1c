#ifndef MODRAD_CLI_HPP
#define MODRAD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "modrad/harness.hpp"

namespace modrad::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;        // usage / parse errors
inline constexpr int kExitUnsupported = 3;  // unsupported ring/representation combination
inline constexpr int kExitAssertion = 4;    // gallery or oracle assertion failure

/// Full command-line entry point (argv style).
int run(int argc, const char* const* argv);
/// Testable entry point: args without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The frozen gallery table exactly as `modrad gallery` prints it on success.
std::string render_gallery();

}  // namespace modrad::cli

#endif  // MODRAD_CLI_HPP
