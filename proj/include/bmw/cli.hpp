#pragma once

#include "bmw/config.hpp"

#include <ostream>
#include <string>

namespace bmw {

// Exit codes shared by dispatch() and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;       // bad command line or config
inline constexpr int kExitInvariant = 3;   // domain/invariant violation
inline constexpr int kExitNoConverge = 4;  // numerical non-convergence

// Runs one subcommand against a parsed config. Summary lines go to `out`;
// a CSV file is written when the config carries an output path. Never
// throws: failures come back as the exit code with a message on `err`.
int dispatch(const std::string& command, const RunConfig& config,
             std::ostream& out, std::ostream& err);

std::string cli_usage();

} // namespace bmw
