#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hkdd::cli {

/// Exit codes.
enum Exit : int {
  kOk = 0,
  kFailure = 1,          // unexpected internal error
  kParseError = 2,       // bad arguments, unreadable input, non-monic polynomial
  kNotIsometry = 3,      // matrix is not an isometry, or det ≠ 1 for SL(2, ℤ)
  kSpectralFailure = 4,  // characteristic polynomial lacks the cyclotomic × Salem structure
};

/// Runs one command line (without the program name). The report goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkdd::cli
