#pragma once

#include <iosfwd>

#include "eitff/error.hpp"

namespace eitff::cli {

enum ExitCode : int {
  kOk = 0,
  kAxiomViolation = 2,
  kUsage = 3,
  kNoConvergence = 4,
};

int exit_code_for(ErrorKind kind);

/// Runs one subcommand. The result envelope
/// {"status", "command", "payload" | "error", "diagnostics"} is written to
/// `out` as canonical JSON; usage text and parse errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace eitff::cli
