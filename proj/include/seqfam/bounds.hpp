#pragma once

// Theoretical bounds with exposed constants, and reports comparing them with
// measured values.
//
// Only exact statements (family sizes, distinctness, k^C <= F, the dual-family
// lower bound on C, Weil) are asserted. Upper bounds with unspecified implied
// constants are envelopes c * formula; lower bounds with o(1) terms are
// reported with the o(1) dropped and never asserted.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqfam/family.hpp"
#include "seqfam/measures.hpp"
#include "seqfam/polynomial.hpp"
#include "seqfam/rational.hpp"

namespace seqfam::bounds {

inline constexpr double kDefaultConstant = 10.0;

enum class DualBoundVariant {
  binary,             // ceil(log2 F - log2 m) - 1
  kary_as_stated,         // ceil(log_k F - log2 m) - 1
  kary_proof_consistent,  // ceil(log_k F - log_k m) - 1
};

std::string_view variant_name(DualBoundVariant v) noexcept;
DualBoundVariant parse_variant(std::string_view name);

/// Lower bound on C from the largest correlation of the dual family, clamped at 0.
/// binary ignores k. Exact for binary and kary_proof_consistent; the
/// mixed-base variant snaps to the nearest integer within 1e-9 before the ceiling.
std::int64_t bound_fc_from_dual(std::uint64_t family_size, const Rational& max_corr, unsigned k, DualBoundVariant variant);

/// c * d * l * sqrt(p) * ln p.
double bound_phi_thm2(std::uint64_t p, unsigned d, unsigned ell, double c);

struct LowerEnvelope {
  double value = 0.0;    // literal expression
  double clamped = 0.0;  // max(value, 0)
  bool degenerate = false;
};

/// (1/2) log2(p / d^2); degenerate (value 0) when p <= d^2.
LowerEnvelope bound_c_thm2(std::uint64_t p, unsigned d);
/// (1/2) log2(p^d / d^2).
double bound_c_thm3(std::uint64_t p, unsigned d);
/// c * l * sqrt(p) * ln p.
double bound_gamma_thm5(std::uint64_t p, unsigned ell, double c);
/// (d/2 - 1) log2 p - log2((d - 1) log2 p).
LowerEnvelope bound_c_thm5(std::uint64_t p, unsigned d);
/// c * ((l p - 1) p^(d/2) + p) / (d p), the restricted gamma of the dual family.
double bound_gamma_circ_thm5(std::uint64_t p, unsigned d, unsigned ell, double c);

enum class Strength {
  exact,          // asserted; violation is a defect
  envelope,       // c * formula upper bound, c unspecified by the theory
  asymptotic,     // o(1) dropped
  informational,  // reported only
};
std::string_view strength_name(Strength s) noexcept;

enum class Direction { upper, lower, equal };
std::string_view direction_name(Direction d) noexcept;

struct BoundReport {
  std::string name;
  std::string subject;  // "family", "dual" or "polynomial"
  /// sampled when a measured input is a sampled lower bound.
  measures::Mode mode = measures::Mode::exact;
  Strength strength = Strength::exact;
  Direction direction = Direction::upper;
  std::vector<std::pair<std::string, std::string>> params;
  std::string theoretical;
  double theoretical_value = 0.0;
  std::string measured;
  double measured_value = 0.0;
  bool satisfied = false;
  std::optional<double> ratio;  // measured / theoretical when theoretical > 0
  std::string note;
};

/// |sum_{n=0}^{p-1} (h(n)/p)| <= (deg h - 1) sqrt(p), compared exactly via squares.
/// Throws ParameterError unless h is square-free of degree >= 1.
BoundReport weil_check(const poly::Polynomial& h);

/// A measure verify_family needs: subject "family" or "dual", name, order.
struct Requirement {
  std::string subject;
  std::string measure;
  unsigned order = 0;
  friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// Measures without which verify_family refuses: C of the family and, for
/// binary families, Phi_i of the dual for i <= log2 F.
std::vector<Requirement> required_measures(const Family& fam);

/// Reports selected by the construction tag. Optional measures (Phi_l and
/// gamma_l of either side, gamma_circ of the dual, gamma_i or Gamma_i of the
/// dual for k > 2) add reports when present.
std::vector<BoundReport> verify_family(const Family& fam, std::span<const measures::MeasureResult> results,
                                       double c = kDefaultConstant);

/// True when every exact report is satisfied.
bool all_exact_satisfied(std::span<const BoundReport> reports);

}  // namespace seqfam::bounds
