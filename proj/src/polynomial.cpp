#include "seqfam/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "seqfam/errors.hpp"

namespace seqfam::poly {

using ff::add_mod;
using ff::mul_mod;
using ff::sub_mod;

namespace {

void trim(std::vector<Residue>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.prime() != b.prime()) {
    throw ParameterError("polynomials over different prime fields (" + std::to_string(a.prime()) +
                         " vs " + std::to_string(b.prime()) + ")");
  }
}

}  // namespace

Polynomial::Polynomial(std::uint64_t p, std::vector<Residue> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p_ == 0) throw ParameterError("polynomial modulus must be nonzero");
  for (auto& c : coeffs_) c %= p_;
  trim(coeffs_);
}

Polynomial Polynomial::monomial(std::uint64_t p, std::size_t n, Residue c) {
  std::vector<Residue> coeffs(n + 1, 0);
  coeffs[n] = c;
  return Polynomial(p, std::move(coeffs));
}

Polynomial Polynomial::monic_from_top(std::uint64_t p, std::span<const Residue> tail) {
  std::vector<Residue> coeffs(tail.size() + 1);
  coeffs[tail.size()] = 1;
  for (std::size_t j = 0; j < tail.size(); ++j) coeffs[tail.size() - 1 - j] = tail[j];
  return Polynomial(p, std::move(coeffs));
}

Residue Polynomial::operator()(Residue n) const noexcept {
  n %= p_;
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(mul_mod(acc, n, p_), *it, p_);
  return acc;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Residue c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::strong_ordering lex_compare(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    if (auto c = a.coeff(idx) <=> b.coeff(idx); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const auto p = a.prime();
  std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a.coeff(i), b.coeff(i), p);
  return Polynomial(p, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const auto p = a.prime();
  std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a.coeff(i), b.coeff(i), p);
  return Polynomial(p, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const auto p = a.prime();
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(p);
  std::vector<Residue> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a.coeffs()[i], b.coeffs()[j], p), p);
    }
  }
  return Polynomial(p, std::move(out));
}

Polynomial scalar_mul(const Polynomial& a, Residue c) {
  std::vector<Residue> out = a.coeffs();
  for (auto& v : out) v = mul_mod(v, c % a.prime(), a.prime());
  return Polynomial(a.prime(), std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto p = a.prime();
  if (a.degree() < b.degree()) return {Polynomial::zero(p), a};
  std::vector<Residue> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Residue> quot(rem.size() - db, 0);
  const Residue lead_inv = ff::inv_mod(b.leading(), p);
  for (std::size_t top = rem.size(); top-- > db;) {
    const Residue c = mul_mod(rem[top], lead_inv, p);
    if (c == 0) continue;
    const std::size_t s = top - db;
    quot[s] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[s + j] = sub_mod(rem[s + j], mul_mod(c, b.coeffs()[j], p), p);
  }
  return {Polynomial(p, std::move(quot)), Polynomial(p, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial make_monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return scalar_mul(a, ff::inv_mod(a.leading(), a.prime()));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Polynomial derivative(const Polynomial& a) {
  if (a.degree() < 1) return Polynomial::zero(a.prime());
  std::vector<Residue> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) out[i - 1] = mul_mod(a.coeffs()[i], i % a.prime(), a.prime());
  return Polynomial(a.prime(), std::move(out));
}

Polynomial pow_mod(Polynomial base, std::uint64_t exponent, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(modulus.prime(), 1) % modulus;
  base = base % modulus;
  while (exponent != 0) {
    if (exponent & 1U) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exponent >>= 1U;
  }
  return result;
}

Polynomial shift(const Polynomial& f, Residue c) {
  // Horner in the ring: f(X + c) = (...((a_d)(X + c) + a_{d-1})(X + c) + ...).
  const auto p = f.prime();
  const Polynomial x_plus_c(p, {c, 1});
  Polynomial acc = Polynomial::zero(p);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * x_plus_c + Polynomial::constant(p, *it);
  }
  return acc;
}

namespace {

Polynomial parse_coefficient_list(std::string_view text, std::uint64_t p) {
  std::vector<Residue> top_first;
  std::string token;
  bool closed = false;
  auto flush = [&] {
    if (token.empty()) throw ParameterError("empty coefficient in list");
    top_first.push_back(static_cast<Residue>(std::stoull(token) % p));
    token.clear();
    closed = false;
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (closed) throw ParameterError("coefficients must be separated by commas");
      token += ch;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      closed = !token.empty();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw ParameterError(std::string("unexpected character '") + ch + "' in coefficient list");
    }
  }
  flush();
  std::reverse(top_first.begin(), top_first.end());
  return Polynomial(p, std::move(top_first));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::uint64_t p) {
  if (p == 0) throw ParameterError("parse_polynomial: p must be nonzero");
  if (text.find(',') != std::string_view::npos ||
      text.find_first_not_of("0123456789 ") == std::string_view::npos) {
    return parse_coefficient_list(text, p);
  }
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(ch));
  }
  if (s.empty()) throw ParameterError("empty polynomial");
  std::vector<Residue> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw ParameterError("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
    }
    std::uint64_t c = 1;
    bool has_digits = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      c = std::stoull(s.substr(start, i - start)) % p;
      has_digits = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t exponent = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParameterError("missing exponent after '^' in '" + s + "'");
        exponent = std::stoull(s.substr(start, i - start));
      }
    } else if (!has_digits) {
      throw ParameterError("malformed term in '" + s + "'");
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    const Residue term = negative ? ff::neg_mod(c, p) : c;
    coeffs[exponent] = add_mod(coeffs[exponent], term, p);
  }
  return Polynomial(p, std::move(coeffs));
}

}  // namespace seqfam::poly
