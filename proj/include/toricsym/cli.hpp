#pragma once

#include <iosfwd>

namespace toricsym::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidPolytope = 1,
  kMalformedInput = 2,
  kInvariantViolation = 3,
  kWeylOrderTooLarge = 4,
};

/// Entry point shared by the toricsym executable and the tests.
///
///   toricsym <command> [--format text|json] [--equivariant]
///            [--weyl-cap N] <input-file>
///   toricsym corpus [--out DIR]
///
/// Commands: validate, roots, aut, cohomology, moment-angle, gmax, report,
/// corpus.  TORICSYM_WEYL_CAP overrides the default Weyl order cap;
/// --weyl-cap overrides both.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace toricsym::cli
