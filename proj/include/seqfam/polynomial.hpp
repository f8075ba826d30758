#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqfam/prime_field.hpp"

namespace seqfam::poly {

using ff::Residue;

/// Dense polynomial over F_p, coefficients indexed by degree.
///
/// Always canonical: coefficients reduced mod p, no trailing zeros, the zero
/// polynomial is the empty coefficient list (degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::uint64_t p, std::vector<Residue> coeffs);

  static Polynomial zero(std::uint64_t p) { return Polynomial(p, {}); }
  static Polynomial constant(std::uint64_t p, Residue c) { return Polynomial(p, {c}); }
  /// x^n
  static Polynomial monomial(std::uint64_t p, std::size_t n, Residue c = 1);
  /// Builds a monic polynomial from coefficients listed highest degree first,
  /// without the leading 1: from_top(p, {a1, ..., ad}) = x^d + a1 x^(d-1) + ... + ad.
  static Polynomial monic_from_top(std::uint64_t p, std::span<const Residue> tail);

  std::uint64_t prime() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  /// Coefficient of x^i (zero beyond the degree).
  Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }

  /// Horner evaluation at n (n reduced mod p first).
  Residue operator()(Residue n) const noexcept;

  /// Human-readable form, e.g. "x^5 + 4x^3 + 8x^2 + 10".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::uint64_t p_ = 0;
  std::vector<Residue> coeffs_;
};

/// Order used for every polynomial listing: degree first, then coefficient
/// tuples compared from the leading coefficient down to the constant term.
std::strong_ordering lex_compare(const Polynomial& a, const Polynomial& b);
inline bool lex_less(const Polynomial& a, const Polynomial& b) { return lex_compare(a, b) < 0; }

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scalar_mul(const Polynomial& a, Residue c);

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

Polynomial make_monic(const Polynomial& a);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial derivative(const Polynomial& a);
/// base^exponent mod modulus.
Polynomial pow_mod(Polynomial base, std::uint64_t exponent, const Polynomial& modulus);
/// f(X + c).
Polynomial shift(const Polynomial& f, Residue c);

/// Parses "x^5 + 4x^3 - x + 10" style input or a comma-separated coefficient
/// list written highest degree first ("1,0,1" is x^2 + 1). Throws ParameterError.
Polynomial parse_polynomial(std::string_view text, std::uint64_t p);

}  // namespace seqfam::poly
