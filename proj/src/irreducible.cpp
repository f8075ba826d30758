#include "seqfam/irreducible.hpp"

#include <algorithm>
#include <string>

#include "seqfam/errors.hpp"

namespace seqfam::poly {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t <= n; ++t) {
    if (n % t == 0) out.push_back(t);
  }
  return out;
}

void require_budget(std::uint64_t needed, EnumerationBudget budget, const char* what) {
  if (needed > budget.max_candidates) {
    throw BudgetError(std::string(what) + ": enumeration budget max_candidates exceeded", needed,
                      budget.max_candidates);
  }
}

/// Number of candidates p^e, saturating instead of overflowing.
std::uint64_t candidate_count(std::uint64_t p, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > (std::uint64_t{1} << 62) / p) return std::uint64_t{1} << 62;
    out *= p;
  }
  return out;
}

/// Odometer over tuples in [0, p)^n, most significant digit first.
bool next_tuple(std::vector<Residue>& digits, std::uint64_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible(const Polynomial& f_in) {
  if (f_in.degree() < 1) throw ParameterError("is_irreducible: degree must be >= 1");
  const Polynomial f = make_monic(f_in);
  const auto p = f.prime();
  const auto n = static_cast<std::uint64_t>(f.degree());
  if (n == 1) return true;
  const Polynomial x = Polynomial::monomial(p, 1);

  // x^(p^t) mod f for t = 1..n by repeated p-th powering.
  std::vector<Polynomial> frob(n + 1);
  frob[0] = x % f;
  for (std::uint64_t t = 1; t <= n; ++t) frob[t] = pow_mod(frob[t - 1], p, f);

  if (!((frob[n] - x) % f).is_zero()) return false;
  for (const auto q : ff::prime_divisors(n)) {
    const Polynomial g = gcd(frob[n / q] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

Polynomial smallest_irreducible(std::uint64_t p, unsigned d) {
  ff::require_odd_prime(p);
  if (d == 0) throw ParameterError("degree must be >= 1");
  std::vector<Residue> tail(d, 0);
  do {
    Polynomial f = Polynomial::monic_from_top(p, tail);
    if (is_irreducible(f)) return f;
  } while (next_tuple(tail, p));
  throw InternalError("no irreducible polynomial of degree " + std::to_string(d));
}

int mobius(std::uint64_t n) {
  if (n == 0) throw ParameterError("mobius(0)");
  int result = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t count_irreducibles(std::uint64_t p, unsigned d) {
  ff::require_odd_prime(p);
  if (d == 0) throw ParameterError("degree must be >= 1");
  __int128 sum = 0;
  for (const auto t : divisors(d)) sum += static_cast<__int128>(mobius(t)) * ipow(p, static_cast<unsigned>(d / t));
  return static_cast<std::uint64_t>(sum / d);
}

std::uint64_t count_trace_zero_irreducibles(std::uint64_t p, unsigned d) {
  ff::require_odd_prime(p);
  if (d == 0) throw ParameterError("degree must be >= 1");
  // Elements of F_{p^e} (e = d/t) have Tr_d = (d/e) Tr_e: the subfield contributes
  // p^(e-1) trace-zero elements when p does not divide t, all p^e otherwise.
  __int128 sum = 0;
  for (const auto t : divisors(d)) {
    const auto e = static_cast<unsigned>(d / t);
    const std::uint64_t zeros = (t % p == 0) ? ipow(p, e) : ipow(p, e - 1);
    sum += static_cast<__int128>(mobius(t)) * zeros;
  }
  if (sum % d != 0) throw InternalError("trace-zero element count not divisible by d");
  return static_cast<std::uint64_t>(sum / d);
}

std::vector<Polynomial> enumerate_trace_zero_irreducibles(std::uint64_t p, unsigned d, EnumerationBudget budget) {
  ff::require_odd_prime(p);
  if (d < 2) throw ParameterError("trace-zero enumeration needs d >= 2");
  require_budget(candidate_count(p, d - 1), budget, "enumerate_trace_zero_irreducibles");
  std::vector<Polynomial> out;
  std::vector<Residue> tail(d, 0);  // tail[0] is the x^(d-1) coefficient, pinned to 0
  std::vector<Residue> free_digits(d - 1, 0);
  do {
    std::copy(free_digits.begin(), free_digits.end(), tail.begin() + 1);
    Polynomial f = Polynomial::monic_from_top(p, tail);
    if (is_irreducible(f)) out.push_back(std::move(f));
  } while (next_tuple(free_digits, p));
  return out;
}

std::vector<Polynomial> enumerate_irreducibles(std::uint64_t p, unsigned d, EnumerationBudget budget) {
  ff::require_odd_prime(p);
  if (d < 1) throw ParameterError("degree must be >= 1");
  require_budget(candidate_count(p, d), budget, "enumerate_irreducibles");
  std::vector<Polynomial> out;
  std::vector<Residue> tail(d, 0);
  do {
    Polynomial f = Polynomial::monic_from_top(p, tail);
    if (is_irreducible(f)) out.push_back(std::move(f));
  } while (next_tuple(tail, p));
  return out;
}

MinimalPolynomial minimal_polynomial(const ff::ExtElem& beta) {
  const auto& field = beta.field();
  const auto p = field->prime();
  const unsigned t = ff::element_degree(beta);

  // Coefficients live in F_{p^d} while multiplying out; index = degree.
  std::vector<ff::ExtElem> coeffs{ff::ExtElem::one(field)};
  ff::ExtElem conjugate = beta;
  for (unsigned i = 0; i < t; ++i) {
    std::vector<ff::ExtElem> next(coeffs.size() + 1, ff::ExtElem::zero(field));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] = next[j + 1] + coeffs[j];
      next[j] = next[j] - coeffs[j] * conjugate;
    }
    coeffs = std::move(next);
    conjugate = ff::frobenius(conjugate);
  }

  std::vector<Residue> projected;
  projected.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.in_prime_field()) throw InternalError("minimal polynomial coefficient outside F_p");
    projected.push_back(c.coords()[0]);
  }
  return {Polynomial(p, std::move(projected)), t == field->degree()};
}

std::vector<ff::ExtElem> conjugacy_representatives(const ff::FieldPtr& field, bool trace_zero_only,
                                                   EnumerationBudget budget) {
  const std::uint64_t q = field->order();
  require_budget(q, budget, "conjugacy_representatives");
  const unsigned d = field->degree();

  struct Entry {
    ff::ExtElem rep;
    Polynomial minpoly;
  };
  std::vector<Entry> entries;
  std::vector<bool> seen(q, false);
  for (std::uint64_t index = 0; index < q; ++index) {
    if (seen[index]) continue;
    const ff::ExtElem alpha = ff::ExtElem::from_index(field, index);
    // Walk the orbit; indices are visited in increasing order, so the first
    // unseen element is also the smallest index in its orbit. Coordinate tuples
    // compare lexicographically from coords[0], so take the minimum explicitly.
    std::vector<ff::ExtElem> orbit{alpha};
    seen[index] = true;
    for (ff::ExtElem next = ff::frobenius(alpha); !(next == alpha); next = ff::frobenius(next)) {
      seen[next.to_index()] = true;
      orbit.push_back(next);
    }
    if (orbit.size() != d) continue;
    if (trace_zero_only && ff::trace(alpha) != 0) continue;
    const auto smallest = std::min_element(orbit.begin(), orbit.end(), [](const ff::ExtElem& a, const ff::ExtElem& b) {
      return a.coords() < b.coords();
    });
    entries.push_back({*smallest, minimal_polynomial(alpha).poly});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return lex_less(a.minpoly, b.minpoly); });

  std::vector<ff::ExtElem> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.rep));
  return out;
}

std::vector<ff::ExtElem> conjugacy_representatives(std::uint64_t p, unsigned d, bool trace_zero_only,
                                                   EnumerationBudget budget) {
  return conjugacy_representatives(ff::FieldParams::make(p, d), trace_zero_only, budget);
}

Polynomial scale_poly(const Polynomial& f, Residue i) {
  const auto p = f.prime();
  if (i % p == 0) throw ParameterError("scale_poly: scaling factor must be nonzero mod p");
  if (!f.is_monic()) throw ParameterError("scale_poly: polynomial must be monic");
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<Residue> out(d + 1);
  Residue power = 1;  // i^j for the coefficient of X^(d-j)
  for (std::size_t j = 0; j <= d; ++j) {
    out[d - j] = ff::mul_mod(f.coeff(d - j), power, p);
    power = ff::mul_mod(power, i % p, p);
  }
  return Polynomial(p, std::move(out));
}

bool is_squarefree(const Polynomial& h) {
  if (h.degree() < 1) throw ParameterError("is_squarefree: degree must be >= 1");
  return gcd(h, derivative(h)).degree() == 0;
}

bool is_squarefree_product(std::span<const ShiftedPolynomial> factors) {
  if (factors.empty()) throw ParameterError("is_squarefree_product: no factors");
  const auto p = factors.front().poly.prime();
  Polynomial h = Polynomial::constant(p, 1);
  for (const auto& f : factors) h = h * shift(f.poly, f.shift);
  if (h.degree() < 1) return true;
  return is_squarefree(h);
}

Polynomial find_f1_base(std::uint64_t p, unsigned d, EnumerationBudget budget) {
  ff::require_odd_prime(p);
  if (d < 4) throw ParameterError("find_f1_base needs d >= 4 (a_3 must be a proper coefficient)");
  std::vector<Residue> free_digits(d - 1, 0);  // (a_2, ..., a_d)
  std::vector<Residue> tail(d, 0);
  std::uint64_t tried = 0;
  do {
    if (free_digits[0] == 0 || free_digits[1] == 0) continue;
    if (++tried > budget.max_candidates) {
      throw BudgetError("find_f1_base: no irreducible base found within max_candidates", tried,
                        budget.max_candidates);
    }
    std::copy(free_digits.begin(), free_digits.end(), tail.begin() + 1);
    Polynomial f = Polynomial::monic_from_top(p, tail);
    if (is_irreducible(f)) return f;
  } while (next_tuple(free_digits, p));
  throw BudgetError("find_f1_base: candidate space exhausted without an irreducible base", tried,
                    budget.max_candidates);
}

}  // namespace seqfam::poly
