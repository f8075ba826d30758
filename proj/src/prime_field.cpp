#include "seqfam/prime_field.hpp"

#include <string>

#include "seqfam/errors.hpp"

namespace seqfam::ff {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw ParameterError("p = " + std::to_string(p) + " is not an odd prime");
  }
  if (p > kMaxPrime) {
    throw ParameterError("p = " + std::to_string(p) + " exceeds the supported maximum " +
                         std::to_string(kMaxPrime));
  }
}

Residue pow_mod(Residue base, std::uint64_t exponent, std::uint64_t p) noexcept {
  Residue result = 1 % p;
  base %= p;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

Residue inv_mod(Residue a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

int legendre(Residue a, std::uint64_t p) {
  require_odd_prime(p);
  if (a >= p) throw ParameterError("legendre: argument not reduced mod p");
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  require_odd_prime(p);
  const auto factors = prime_divisors(p - 1);
  for (std::uint64_t g = 1; g < p; ++g) {
    bool generator = true;
    for (const auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw InternalError("no primitive root found mod " + std::to_string(p));
}

CharacterTable::CharacterTable(std::uint64_t p, unsigned k) : p_(p), k_(k), g_(0) {
  require_odd_prime(p);
  if (k == 0 || (p - 1) % k != 0) {
    throw ParameterError("character order k = " + std::to_string(k) + " does not divide p - 1 = " +
                         std::to_string(p - 1));
  }
  g_ = smallest_primitive_root(p);
  dlog_.assign(p, 0);
  Residue power = 1;
  for (std::uint32_t e = 0; e + 1 < p; ++e) {
    dlog_[power] = e;
    power = mul_mod(power, g_, p);
  }
}

std::uint32_t CharacterTable::discrete_log(Residue m) const {
  if (m % p_ == 0) throw DomainError("discrete log of zero");
  return dlog_[m % p_];
}

unsigned CharacterTable::operator()(Residue m) const {
  return static_cast<unsigned>(discrete_log(m) % k_);
}

unsigned char_k(Residue m, unsigned k, std::uint64_t p) {
  const CharacterTable table(p, k);
  return table(m);
}

}  // namespace seqfam::ff
