#pragma once

// Irreducibility, trace-zero irreducible enumeration and counting, minimal
// polynomials and Frobenius-orbit representatives over F_p.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqfam/extension_field.hpp"
#include "seqfam/polynomial.hpp"

namespace seqfam::poly {

/// Cap on brute-force enumeration (candidate polynomials or field elements).
struct EnumerationBudget {
  std::uint64_t max_candidates = 10'000'000;
};

/// Rabin's test. f is normalized to monic first; deg f >= 1 required.
bool is_irreducible(const Polynomial& f);

/// Lexicographically smallest monic irreducible of degree d over F_p.
Polynomial smallest_irreducible(std::uint64_t p, unsigned d);

int mobius(std::uint64_t n);

/// Number of monic irreducibles of degree d: (1/d) sum_{t|d} mu(t) p^(d/t).
std::uint64_t count_irreducibles(std::uint64_t p, unsigned d);

/// Number of monic irreducibles of degree d with zero x^(d-1) coefficient.
///
/// Counts degree-d elements of F_{p^d} with absolute trace 0 and divides by d.
/// When p does not divide d this is (1/(dp)) sum_{t|d} mu(t) p^(d/t).
std::uint64_t count_trace_zero_irreducibles(std::uint64_t p, unsigned d);

/// The set Omega: monic irreducible x^d + a_2 x^(d-2) + ... + a_d, in
/// lexicographic order of (a_2, ..., a_d).
std::vector<Polynomial> enumerate_trace_zero_irreducibles(std::uint64_t p, unsigned d,
                                                          EnumerationBudget budget = {});

/// All monic irreducibles of degree d, lexicographic.
std::vector<Polynomial> enumerate_irreducibles(std::uint64_t p, unsigned d, EnumerationBudget budget = {});

struct MinimalPolynomial {
  Polynomial poly;
  /// False when beta lies in a proper subfield; poly then has degree < d.
  bool generates_field;
};

/// prod over the Frobenius orbit of (X - beta^(p^i)), projected to F_p[X].
MinimalPolynomial minimal_polynomial(const ff::ExtElem& beta);

/// One element per Frobenius orbit of degree-d elements (proper subfields
/// excluded), optionally only trace-zero ones. Each representative is the
/// lexicographically smallest coordinate tuple of its orbit; the list is
/// ordered by minimal polynomial (lex_less).
std::vector<ff::ExtElem> conjugacy_representatives(const ff::FieldPtr& field, bool trace_zero_only,
                                                   EnumerationBudget budget = {});
std::vector<ff::ExtElem> conjugacy_representatives(std::uint64_t p, unsigned d, bool trace_zero_only,
                                                   EnumerationBudget budget = {});

/// i^d f(X/i): coefficient of X^(d-j) becomes a_j i^j.
Polynomial scale_poly(const Polynomial& f, Residue i);

inline Residue eval_poly(const Polynomial& f, Residue n) { return f(n); }

struct ShiftedPolynomial {
  Polynomial poly;
  Residue shift = 0;
};

/// Forms h(X) = prod f_j(X + shift_j) and tests gcd(h, h') = 1.
bool is_squarefree_product(std::span<const ShiftedPolynomial> factors);

bool is_squarefree(const Polynomial& h);

/// First monic x^d + a_2 x^(d-2) + a_3 x^(d-3) + ... + a_d with a_2, a_3 != 0
/// that is irreducible, scanning (a_2, ..., a_d) lexicographically.
Polynomial find_f1_base(std::uint64_t p, unsigned d, EnumerationBudget budget = {});

}  // namespace seqfam::poly
