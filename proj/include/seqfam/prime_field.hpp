#pragma once

// Arithmetic in F_p for word-sized odd primes, the Legendre symbol and
// order-k multiplicative characters.

#include <cstdint>
#include <vector>

namespace seqfam::ff {

using Residue = std::uint64_t;

/// Largest prime accepted anywhere in the library; keeps every product below 2^62.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n) noexcept;

/// Throws ParameterError unless p is an odd prime <= kMaxPrime.
void require_odd_prime(std::uint64_t p);

inline Residue add_mod(Residue a, Residue b, std::uint64_t p) noexcept {
  const Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline Residue mul_mod(Residue a, Residue b, std::uint64_t p) noexcept { return (a * b) % p; }
inline Residue neg_mod(Residue a, std::uint64_t p) noexcept { return a == 0 ? 0 : p - a; }

Residue pow_mod(Residue base, std::uint64_t exponent, std::uint64_t p) noexcept;

/// Inverse via Fermat; throws DomainError for a == 0.
Residue inv_mod(Residue a, std::uint64_t p);

/// Legendre symbol (a/p) in {-1, 0, +1}, computed as a^((p-1)/2) mod p.
int legendre(Residue a, std::uint64_t p);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Smallest g >= 1 generating F_p^*.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Order-k multiplicative character of F_p, valued in symbol indices:
/// chi(m) = ind_g(m) mod k, index j standing for exp(2*pi*i*j/k), with g the
/// smallest primitive root. Backed by a full discrete-log table.
class CharacterTable {
 public:
  CharacterTable(std::uint64_t p, unsigned k);

  unsigned operator()(Residue m) const;

  std::uint64_t prime() const noexcept { return p_; }
  unsigned order() const noexcept { return k_; }
  std::uint64_t generator() const noexcept { return g_; }
  std::uint32_t discrete_log(Residue m) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t g_;
  std::vector<std::uint32_t> dlog_;
};

/// One-shot convenience wrapper around CharacterTable.
unsigned char_k(Residue m, unsigned k, std::uint64_t p);

}  // namespace seqfam::ff
