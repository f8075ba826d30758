#pragma once

#include <iosfwd>

namespace seqfam::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParameterError = 2;
inline constexpr int kBudgetError = 3;
inline constexpr int kViolation = 4;

/// Subcommands: gen, dual, measure, verify, weil. Reports go to `out` unless
/// --out is given; diagnostics and usage text go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqfam::cli
