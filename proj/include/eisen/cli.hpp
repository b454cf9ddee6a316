#pragma once

#include <ostream>
#include <string>

#include "eisen/types.hpp"

namespace eisen {

// Exit codes. Every error path has its own code so scripts can branch on it.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitPole = 4,
  kExitConvergence = 5,
  kExitConditioning = 6,
  kExitIo = 7,
  kExitInternal = 8,
};

// Parses "a+bi", "a-bi", "a", "bi", "i", "-i". Throws DomainError otherwise.
cplx parse_complex(const std::string& text);

// Entry point behind the eisen executable. Results go to out, diagnostics to
// err; error objects are JSON on out.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace eisen
