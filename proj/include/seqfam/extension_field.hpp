#pragma once

// F_{p^d} as F_p[x]/(m(x)) in the polynomial basis 1, x, ..., x^(d-1).

#include <cstdint>
#include <memory>
#include <vector>

#include "seqfam/polynomial.hpp"

namespace seqfam::ff {

/// Arithmetic context for F_{p^d}. Immutable; share through FieldPtr.
class FieldParams {
 public:
  /// Deterministic field: the modulus is the lexicographically smallest monic
  /// irreducible polynomial of degree d over F_p.
  static std::shared_ptr<const FieldParams> make(std::uint64_t p, unsigned d);
  /// Field with a caller-chosen modulus (checked monic and irreducible).
  static std::shared_ptr<const FieldParams> with_modulus(const poly::Polynomial& modulus);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned degree() const noexcept { return d_; }
  const poly::Polynomial& modulus() const noexcept { return modulus_; }
  /// p^d
  std::uint64_t order() const noexcept { return order_; }

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldParams(std::uint64_t p, unsigned d, poly::Polynomial modulus);

  std::uint64_t p_;
  unsigned d_;
  std::uint64_t order_;
  poly::Polynomial modulus_;
};

using FieldPtr = std::shared_ptr<const FieldParams>;

/// Element of F_{p^d}; coords()[i] is the coefficient of x^i.
class ExtElem {
 public:
  ExtElem(FieldPtr field, std::vector<Residue> coords);

  static ExtElem zero(const FieldPtr& field);
  static ExtElem one(const FieldPtr& field);
  static ExtElem from_prime_field(const FieldPtr& field, Residue c);
  /// The class of x (the generator of the polynomial basis).
  static ExtElem generator(const FieldPtr& field);
  /// Base-p digits of index as coordinates; bijection [0, p^d) -> F_{p^d}.
  static ExtElem from_index(const FieldPtr& field, std::uint64_t index);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Residue>& coords() const noexcept { return coords_; }
  std::uint64_t to_index() const noexcept;
  bool is_zero() const noexcept;
  /// True when all coordinates beyond index 0 vanish.
  bool in_prime_field() const noexcept;

  ExtElem inverse() const;
  ExtElem pow(std::uint64_t exponent) const;

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  ExtElem operator-() const;

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.coords_ == b.coords_ && *a.field_ == *b.field_;
  }

 private:
  FieldPtr field_;
  std::vector<Residue> coords_;
};

/// alpha^p
ExtElem frobenius(const ExtElem& alpha);
/// alpha + alpha^p + ... + alpha^(p^(d-1)), in F_p.
Residue trace(const ExtElem& alpha);
/// alpha * alpha^p * ... * alpha^(p^(d-1)), in F_p; norm(0) = 0.
Residue norm(const ExtElem& alpha);
/// Quadratic character of F_{p^d}: legendre(norm(alpha), p).
int quad_char_ext(const ExtElem& alpha);

/// Smallest t >= 1 with alpha^(p^t) = alpha, i.e. [F_p(alpha) : F_p].
unsigned element_degree(const ExtElem& alpha);

}  // namespace seqfam::ff
