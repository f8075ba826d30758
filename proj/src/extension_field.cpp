#include "seqfam/extension_field.hpp"

#include <string>

#include "seqfam/errors.hpp"
#include "seqfam/irreducible.hpp"

namespace seqfam::ff {

namespace {

std::uint64_t checked_power(std::uint64_t p, unsigned d) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (out > (std::uint64_t{1} << 62) / p) throw ParameterError("p^d overflows 62 bits");
    out *= p;
  }
  return out;
}

void require_same_field(const ExtElem& a, const ExtElem& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) {
    throw ParameterError("extension field elements from different FieldParams");
  }
}

}  // namespace

FieldParams::FieldParams(std::uint64_t p, unsigned d, poly::Polynomial modulus)
    : p_(p), d_(d), order_(checked_power(p, d)), modulus_(std::move(modulus)) {}

std::shared_ptr<const FieldParams> FieldParams::make(std::uint64_t p, unsigned d) {
  require_odd_prime(p);
  if (d == 0) throw ParameterError("extension degree must be >= 1");
  checked_power(p, d);
  return std::shared_ptr<const FieldParams>(new FieldParams(p, d, poly::smallest_irreducible(p, d)));
}

std::shared_ptr<const FieldParams> FieldParams::with_modulus(const poly::Polynomial& modulus) {
  require_odd_prime(modulus.prime());
  if (modulus.degree() < 1 || !modulus.is_monic()) throw ParameterError("field modulus must be monic of degree >= 1");
  if (!poly::is_irreducible(modulus)) throw ParameterError("field modulus " + modulus.to_string() + " is reducible");
  return std::shared_ptr<const FieldParams>(
      new FieldParams(modulus.prime(), static_cast<unsigned>(modulus.degree()), modulus));
}

ExtElem::ExtElem(FieldPtr field, std::vector<Residue> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw ParameterError("ExtElem needs a field");
  if (coords_.size() > field_->degree()) {
    // Reduce a longer representative modulo the field polynomial.
    const poly::Polynomial reduced = poly::Polynomial(field_->prime(), coords_) % field_->modulus();
    coords_ = reduced.coeffs();
  }
  coords_.resize(field_->degree(), 0);
  for (auto& c : coords_) c %= field_->prime();
}

ExtElem ExtElem::zero(const FieldPtr& field) { return ExtElem(field, {}); }
ExtElem ExtElem::one(const FieldPtr& field) { return ExtElem(field, {1}); }
ExtElem ExtElem::from_prime_field(const FieldPtr& field, Residue c) { return ExtElem(field, {c}); }
ExtElem ExtElem::generator(const FieldPtr& field) { return ExtElem(field, {0, 1}); }

ExtElem ExtElem::from_index(const FieldPtr& field, std::uint64_t index) {
  std::vector<Residue> coords(field->degree());
  for (auto& c : coords) {
    c = index % field->prime();
    index /= field->prime();
  }
  return ExtElem(field, std::move(coords));
}

std::uint64_t ExtElem::to_index() const noexcept {
  std::uint64_t index = 0;
  for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) index = index * field_->prime() + *it;
  return index;
}

bool ExtElem::is_zero() const noexcept {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool ExtElem::in_prime_field() const noexcept {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  require_same_field(a, b);
  std::vector<Residue> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a.coords_[i], b.coords_[i], a.field_->prime());
  return ExtElem(a.field_, std::move(out));
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
  require_same_field(a, b);
  std::vector<Residue> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a.coords_[i], b.coords_[i], a.field_->prime());
  return ExtElem(a.field_, std::move(out));
}

ExtElem ExtElem::operator-() const { return zero(field_) - *this; }

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  require_same_field(a, b);
  const auto p = a.field_->prime();
  const poly::Polynomial product = poly::Polynomial(p, a.coords_) * poly::Polynomial(p, b.coords_);
  return ExtElem(a.field_, (product % a.field_->modulus()).coeffs());
}

ExtElem ExtElem::pow(std::uint64_t exponent) const {
  ExtElem result = one(field_);
  ExtElem base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

ExtElem ExtElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_{p^d}");
  // |F^*| = p^d - 1
  return pow(field_->order() - 2);
}

ExtElem frobenius(const ExtElem& alpha) { return alpha.pow(alpha.field()->prime()); }

Residue trace(const ExtElem& alpha) {
  ExtElem sum = ExtElem::zero(alpha.field());
  ExtElem conjugate = alpha;
  for (unsigned i = 0; i < alpha.field()->degree(); ++i) {
    sum = sum + conjugate;
    conjugate = frobenius(conjugate);
  }
  if (!sum.in_prime_field()) throw InternalError("trace left the prime field");
  return sum.coords()[0];
}

Residue norm(const ExtElem& alpha) {
  if (alpha.is_zero()) return 0;
  ExtElem product = ExtElem::one(alpha.field());
  ExtElem conjugate = alpha;
  for (unsigned i = 0; i < alpha.field()->degree(); ++i) {
    product = product * conjugate;
    conjugate = frobenius(conjugate);
  }
  if (!product.in_prime_field()) throw InternalError("norm left the prime field");
  return product.coords()[0];
}

int quad_char_ext(const ExtElem& alpha) { return legendre(norm(alpha), alpha.field()->prime()); }

unsigned element_degree(const ExtElem& alpha) {
  ExtElem conjugate = frobenius(alpha);
  unsigned t = 1;
  while (!(conjugate == alpha)) {
    conjugate = frobenius(conjugate);
    ++t;
  }
  return t;
}

}  // namespace seqfam::ff
