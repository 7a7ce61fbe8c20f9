#pragma once

#include <iosfwd>

namespace symfv {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // audit not bit-exact, property/convergence gate failed
inline constexpr int kExitBadInput = 2;     // bad arguments or malformed file
inline constexpr int kExitUnphysical = 3;   // unphysical state during a run

/// Entry point of the `symfv` tool: subcommands run, audit, convergence,
/// selection-map, properties.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symfv
