#pragma once

// Exact (exhaustive) and sampled evaluation of the family measures:
//
//   fc          f-complexity C
//   phi         cross-correlation Phi_l (binary)
//   phi_circ    Phi_l restricted to full window and zero shifts
//   gamma       pattern-count correlation gamma_l (any alphabet)
//   gamma_circ  gamma_l restricted to full window and zero shifts
//   big_gamma   root-of-unity correlation Gamma_l
//
// Every result carries a witness that re-evaluates to the reported value.
// Ties between witnesses resolve to the lexicographically smallest
// (I, D, M, W), independent of thread count.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqfam/family.hpp"
#include "seqfam/rational.hpp"

namespace seqfam::measures {

enum class Mode { exact, sampled };

/// "exact" or "sampled-lower-bound".
std::string_view mode_name(Mode mode) noexcept;

/// Default loop-count budget; covers l <= 3, N <= 32, F <= 12 for phi and gamma.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 32;

struct EvalOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;  // 0 = hardware concurrency
  Mode mode = Mode::exact;
  std::uint64_t seed = 0;
  std::uint64_t samples = 4096;
};

/// (M, D, I, W) tuple of the correlation definitions.
struct CorrelationSpec {
  std::size_t window = 0;                         // M
  std::vector<std::size_t> shifts;                // D, nondecreasing, 0-based
  std::vector<std::size_t> rows;                  // I, 1-based
  std::vector<Symbol> pattern;                    // W, gamma only
  std::vector<std::vector<unsigned>> bijections;  // phi_j: symbol -> root index, big_gamma only

  unsigned order() const noexcept { return static_cast<unsigned>(rows.size()); }
  friend bool operator==(const CorrelationSpec&, const CorrelationSpec&) = default;
};

/// fc witnesses are uncovered specification patterns; an empty witness means
/// no certificate exists (C reached N, or no admissible tuple for the circ measures).
using Witness = std::variant<std::monostate, CorrelationSpec, SpecificationPattern>;

struct MeasureResult {
  std::string name;
  unsigned order = 0;
  /// Exact value; left at 0 when value_exact is false.
  Rational value;
  double approx = 0.0;
  /// False only for big_gamma with k > 2; approx then holds the magnitude,
  /// correct to within error_bound.
  bool value_exact = true;
  double error_bound = 0.0;
  Witness witness;
  Mode mode = Mode::exact;
  /// Which family the measure was taken on: "family" or "dual".
  std::string subject = "family";

  /// "num/den" when exact, otherwise the double in shortest round-trip form.
  std::string value_string() const;
};

MeasureResult f_complexity(const Family& fam, const EvalOptions& options = {});
MeasureResult cross_correlation(const Family& fam, unsigned ell, const EvalOptions& options = {});
MeasureResult cross_correlation_circ(const Family& fam, unsigned ell, const EvalOptions& options = {});
MeasureResult gamma(const Family& fam, unsigned ell, const EvalOptions& options = {});
MeasureResult gamma_circ(const Family& fam, unsigned ell, const EvalOptions& options = {});
MeasureResult big_gamma(const Family& fam, unsigned ell, const EvalOptions& options = {});

/// Dispatch by measure name (the names listed at the top of this header).
MeasureResult compute(const Family& fam, std::string_view name, unsigned ell, const EvalOptions& options = {});

/// Shift/row admissibility: d_a != d_b whenever rows i_a and i_b are equal
/// sequences (a repeated index included). rows are 0-based here.
bool admissible(const Family& fam, std::span<const std::size_t> rows, std::span<const std::size_t> shifts);

// Direct re-evaluation of witnesses, straight from the definitions. These do
// not use the kernels or the incremental scans.

/// sum_{n=1}^{M} prod_j e_{i_j, n + d_j} with e = +-1.
std::int64_t phi_sum_at(const Family& fam, const CorrelationSpec& spec);
/// |#{n <= M : pattern matches} - M / k^l|.
Rational gamma_at(const Family& fam, const CorrelationSpec& spec);
/// |sum_{n=1}^{M} prod_j phi_j(e_{i_j, n + d_j})|.
double big_gamma_at(const Family& fam, const CorrelationSpec& spec);
/// True when no row matches the pattern.
bool pattern_uncovered(const Family& fam, const SpecificationPattern& pattern);

/// Re-evaluates the witness of `result` on `fam` and compares with the value
/// (within error_bound for inexact values). For fc, checks that the certificate
/// has C + 1 positions and is uncovered.
bool witness_reproduces(const Family& fam, const MeasureResult& result);

/// Number of nondecreasing shift tuples (d_1 <= ... <= d_l <= N - 1), saturating.
std::uint64_t shift_tuple_count(std::size_t length, unsigned ell);

}  // namespace seqfam::measures
