#include <cmath>
#include <complex>
#include <numbers>

#include "seqfam/errors.hpp"
#include "seqfam/measures.hpp"

namespace seqfam::measures {

namespace {

void check_spec(const Family& fam, const CorrelationSpec& spec) {
  const std::size_t ell = spec.rows.size();
  if (ell == 0 || spec.shifts.size() != ell) throw ParameterError("witness: rows and shifts must have length l >= 1");
  for (auto r : spec.rows) {
    if (r < 1 || r > fam.size()) throw ParameterError("witness: row index out of range");
  }
  for (std::size_t j = 1; j < ell; ++j) {
    if (spec.shifts[j] < spec.shifts[j - 1]) throw ParameterError("witness: shifts must be nondecreasing");
  }
  if (spec.window < 1 || spec.window + spec.shifts.back() > fam.length()) {
    throw ParameterError("witness: window M must satisfy 1 <= M and M + d_l <= N");
  }
}

Symbol symbol_at(const Family& fam, const CorrelationSpec& spec, std::size_t j, std::size_t n) {
  return fam.at(spec.rows[j] - 1, n + spec.shifts[j]);
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& rows) {
  std::vector<std::size_t> out;
  for (auto r : rows) out.push_back(r - 1);
  return out;
}

}  // namespace

std::int64_t phi_sum_at(const Family& fam, const CorrelationSpec& spec) {
  check_spec(fam, spec);
  if (fam.alphabet() != 2) throw ParameterError("phi needs a binary family");
  std::int64_t sum = 0;
  for (std::size_t n = 0; n < spec.window; ++n) {
    std::int64_t term = 1;
    for (std::size_t j = 0; j < spec.rows.size(); ++j) term *= symbol_at(fam, spec, j, n) == 0 ? 1 : -1;
    sum += term;
  }
  return sum;
}

Rational gamma_at(const Family& fam, const CorrelationSpec& spec) {
  check_spec(fam, spec);
  if (spec.pattern.size() != spec.rows.size()) throw ParameterError("witness: pattern W must have length l");
  std::int64_t count = 0;
  for (std::size_t n = 0; n < spec.window; ++n) {
    bool match = true;
    for (std::size_t j = 0; j < spec.rows.size(); ++j) match = match && symbol_at(fam, spec, j, n) == spec.pattern[j];
    count += match ? 1 : 0;
  }
  std::int64_t big_k = 1;
  for (std::size_t j = 0; j < spec.rows.size(); ++j) big_k *= fam.alphabet();
  const auto m = static_cast<std::int64_t>(spec.window);
  return Rational(std::llabs(big_k * count - m), big_k);
}

double big_gamma_at(const Family& fam, const CorrelationSpec& spec) {
  check_spec(fam, spec);
  const unsigned k = fam.alphabet();
  if (spec.bijections.size() != spec.rows.size()) throw ParameterError("witness: need one bijection per row");
  std::vector<std::vector<std::complex<double>>> phi;
  for (const auto& b : spec.bijections) {
    if (b.size() != k) throw ParameterError("witness: bijection must have k entries");
    std::vector<char> hit(k, 0);
    std::vector<std::complex<double>> roots;
    for (auto r : b) {
      if (r >= k || hit[r]) throw ParameterError("witness: bijection is not a permutation of root indices");
      hit[r] = 1;
      roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * r / k));
    }
    phi.push_back(std::move(roots));
  }
  std::complex<double> sum = 0.0;
  for (std::size_t n = 0; n < spec.window; ++n) {
    std::complex<double> term = 1.0;
    for (std::size_t j = 0; j < spec.rows.size(); ++j) term *= phi[j][symbol_at(fam, spec, j, n)];
    sum += term;
  }
  return std::abs(sum);
}

bool pattern_uncovered(const Family& fam, const SpecificationPattern& pattern) {
  if (pattern.positions.size() != pattern.symbols.size()) return false;
  for (std::size_t t = 0; t < pattern.positions.size(); ++t) {
    if (pattern.positions[t] < 1 || pattern.positions[t] > fam.length()) return false;
    if (t > 0 && pattern.positions[t] <= pattern.positions[t - 1]) return false;
  }
  for (std::size_t r = 0; r < fam.size(); ++r) {
    bool match = true;
    for (std::size_t t = 0; t < pattern.positions.size() && match; ++t) {
      match = fam.at(r, pattern.positions[t] - 1) == pattern.symbols[t];
    }
    if (match) return false;
  }
  return true;
}

bool witness_reproduces(const Family& fam, const MeasureResult& result) {
  if (result.name == "fc") {
    if (std::holds_alternative<std::monostate>(result.witness)) {
      return result.value == Rational(static_cast<std::int64_t>(fam.length()));
    }
    const auto* w = std::get_if<SpecificationPattern>(&result.witness);
    return w != nullptr && result.value == Rational(static_cast<std::int64_t>(w->positions.size()) - 1) &&
           pattern_uncovered(fam, *w);
  }

  if (std::holds_alternative<std::monostate>(result.witness)) return result.value_exact && result.value == Rational(0);
  const auto* spec = std::get_if<CorrelationSpec>(&result.witness);
  if (spec == nullptr || spec->order() != result.order) return false;
  const bool circ = result.name == "phi_circ" || result.name == "gamma_circ";
  if (circ) {
    if (spec->window != fam.length()) return false;
    for (auto d : spec->shifts) {
      if (d != 0) return false;
    }
  }
  try {
    check_spec(fam, *spec);
  } catch (const ParameterError&) {
    return false;
  }
  if (!admissible(fam, zero_based(spec->rows), spec->shifts)) return false;

  if (result.name == "phi" || result.name == "phi_circ") {
    return Rational(std::llabs(phi_sum_at(fam, *spec))) == result.value;
  }
  if (result.name == "gamma" || result.name == "gamma_circ") return gamma_at(fam, *spec) == result.value;
  if (result.name == "big_gamma") {
    const double direct = big_gamma_at(fam, *spec);
    if (result.value_exact) return std::llround(direct) == result.value.num() && result.value.den() == 1;
    // Both evaluations carry at most error_bound each.
    return std::abs(direct - result.approx) <= 2 * result.error_bound;
  }
  return false;
}

}  // namespace seqfam::measures
