#include <doctest.h>

#include <random>
#include <set>

#include "seqfam/errors.hpp"
#include "seqfam/extension_field.hpp"
#include "seqfam/irreducible.hpp"
#include "seqfam/polynomial.hpp"
#include "seqfam/prime_field.hpp"

using namespace seqfam;
using namespace seqfam::ff;

namespace {

ExtElem random_elem(const FieldPtr& field, std::mt19937_64& rng) {
  return ExtElem::from_index(field, std::uniform_int_distribution<std::uint64_t>(0, field->order() - 1)(rng));
}

FieldPtr f9() { return FieldParams::with_modulus(poly::Polynomial(3, {1, 0, 1})); }

}  // namespace

TEST_CASE("primality") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 101ull, 2147483647ull}) CHECK(is_prime(p));
  for (std::uint64_t n : {0ull, 1ull, 4ull, 9ull, 15ull, 91ull, 561ull, 2147483649ull}) CHECK_FALSE(is_prime(n));
  CHECK_THROWS_AS(require_odd_prime(2), ParameterError);
  CHECK_THROWS_AS(require_odd_prime(9), ParameterError);
  CHECK_NOTHROW(require_odd_prime(13));
}

TEST_CASE("modular arithmetic") {
  CHECK(pow_mod(3, 6, 7) == 1);
  CHECK(pow_mod(2, 10, 1000003) == 1024);
  for (Residue a = 1; a < 13; ++a) CHECK(mul_mod(a, inv_mod(a, 13), 13) == 1);
  CHECK_THROWS_AS(inv_mod(0, 13), DomainError);
  CHECK(neg_mod(0, 7) == 0);
  CHECK(sub_mod(2, 5, 7) == 4);
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(0, 7) == 0);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK_THROWS_AS(legendre(7, 7), ParameterError);
  CHECK_THROWS_AS(legendre(1, 9), ParameterError);

  for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
    std::set<Residue> squares;
    for (Residue n = 1; n < p; ++n) squares.insert(n * n % p);
    int positive = 0;
    for (Residue a = 1; a < p; ++a) {
      CHECK(legendre(a, p) == (squares.count(a) ? 1 : -1));
      positive += legendre(a, p) == 1;
      for (Residue b = 1; b < p; ++b) CHECK(legendre(a * b % p, p) == legendre(a, p) * legendre(b, p));
    }
    CHECK(positive == static_cast<int>((p - 1) / 2));
  }
}

TEST_CASE("primitive roots") {
  CHECK(smallest_primitive_root(3) == 2);
  CHECK(smallest_primitive_root(5) == 2);
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(11) == 2);
  CHECK(smallest_primitive_root(13) == 2);
  CHECK(smallest_primitive_root(23) == 5);
  CHECK(smallest_primitive_root(41) == 6);
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("order-k character") {
  CHECK(char_k(1, 3, 7) == 0);
  CHECK(char_k(2, 3, 7) == 2);
  for (Residue m = 1; m < 5; ++m) CHECK(char_k(m, 2, 5) == (legendre(m, 5) == 1 ? 0u : 1u));
  CHECK_THROWS_AS(CharacterTable(7, 4), ParameterError);

  const CharacterTable chi(13, 3);
  CHECK(chi.generator() == 2);
  CHECK(chi(2) == 1);
  CHECK_THROWS_AS(chi(0), DomainError);
  for (Residue a = 1; a < 13; ++a) {
    CHECK(pow_mod(2, chi.discrete_log(a), 13) == a);
    for (Residue b = 1; b < 13; ++b) CHECK(chi(a * b % 13) == (chi(a) + chi(b)) % 3);
  }
  // chi(m) = 0 exactly on the k-th powers.
  for (Residue m = 1; m < 13; ++m) {
    bool cube = false;
    for (Residue n = 1; n < 13; ++n) cube = cube || n * n * n % 13 == m;
    CHECK((chi(m) == 0) == cube);
  }
}

TEST_CASE("extension field F_9 by hand") {
  const auto field = f9();
  const auto x = ExtElem::generator(field);
  CHECK((x * x).coords() == std::vector<Residue>{2, 0});
  CHECK(frobenius(x).coords() == std::vector<Residue>{0, 2});
  CHECK(trace(x) == 0);
  CHECK(norm(x) == 1);
  CHECK(quad_char_ext(x) == 1);
  CHECK(quad_char_ext(ExtElem::zero(field)) == 0);
  CHECK(norm(ExtElem::zero(field)) == 0);
  CHECK(element_degree(x) == 2);
  CHECK(element_degree(ExtElem::from_prime_field(field, 2)) == 1);
  CHECK_THROWS_AS(ExtElem::zero(field).inverse(), DomainError);
}

TEST_CASE("deterministic modulus") {
  const auto a = FieldParams::make(5, 3);
  const auto b = FieldParams::make(5, 3);
  CHECK(*a == *b);
  CHECK(a->order() == 125);
  CHECK(a->modulus() == poly::smallest_irreducible(5, 3));
  CHECK(poly::is_irreducible(a->modulus()));
  CHECK_THROWS_AS(FieldParams::with_modulus(poly::Polynomial(5, {1, 0, 1})), ParameterError);
  CHECK_THROWS_AS(ExtElem::one(a) + ExtElem::one(f9()), ParameterError);
}

TEST_CASE("field axioms and Frobenius on random elements") {
  std::mt19937_64 rng(7);
  for (auto [p, d] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 3}, {7, 2}, {13, 2}, {3, 4}, {11, 3}}) {
    const auto field = FieldParams::make(p, d);
    const auto one = ExtElem::one(field);
    const auto zero = ExtElem::zero(field);
    for (int t = 0; t < 40; ++t) {
      const auto a = random_elem(field, rng);
      const auto b = random_elem(field, rng);
      const auto c = random_elem(field, rng);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == zero);
      CHECK(-a + a == zero);
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
      CHECK(a.pow(field->order()) == a);
      CHECK(ExtElem::from_index(field, a.to_index()) == a);

      auto f = a;
      for (unsigned i = 0; i < d; ++i) f = frobenius(f);
      CHECK(f == a);
      CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
      CHECK(trace(frobenius(a)) == trace(a));
      CHECK(add_mod(trace(a), trace(b), p) == trace(a + b));
      CHECK(mul_mod(norm(a), norm(b), p) == norm(a * b));
      if (!a.is_zero()) CHECK(quad_char_ext(a * a) == 1);
    }
    for (Residue cst = 0; cst < p; ++cst) {
      const auto e = ExtElem::from_prime_field(field, cst);
      CHECK(frobenius(e) == e);
      CHECK(trace(e) == cst * d % p);
      CHECK(norm(e) == pow_mod(cst, d, p));
    }
  }
}

TEST_CASE("quadratic character splits the multiplicative group") {
  for (auto [p, d] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {5, 3}, {7, 3}}) {
    const auto field = FieldParams::make(p, d);
    std::uint64_t positive = 0;
    for (std::uint64_t i = 1; i < field->order(); ++i) positive += quad_char_ext(ExtElem::from_index(field, i)) == 1;
    CHECK(positive == (field->order() - 1) / 2);
  }
}
