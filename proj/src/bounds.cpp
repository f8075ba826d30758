#include "seqfam/bounds.hpp"

#include <charconv>
#include <cmath>

#include "seqfam/errors.hpp"
#include "seqfam/irreducible.hpp"
#include "seqfam/prime_field.hpp"

namespace seqfam::bounds {

namespace {

using u128 = unsigned __int128;

constexpr u128 kSaturated = u128{1} << 126;

u128 sat_mul(u128 a, u128 b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

/// Smallest t with base^t >= num / den (num, den > 0), exactly.
std::int64_t ceil_log(unsigned base, u128 num, u128 den) {
  // base^t * den >= num for t >= 0; den >= num * base^-t for t < 0.
  auto reaches = [&](std::int64_t t) {
    u128 lhs = den;
    u128 rhs = num;
    for (std::int64_t i = 0; i < (t < 0 ? -t : t); ++i) {
      if (t > 0) {
        lhs = sat_mul(lhs, base);
      } else {
        rhs = sat_mul(rhs, base);
      }
    }
    return lhs >= rhs;
  };
  std::int64_t t = 0;
  if (reaches(0)) {
    while (reaches(t - 1)) --t;
  } else {
    while (!reaches(t)) ++t;
  }
  return t;
}

}  // namespace

std::string_view variant_name(DualBoundVariant v) noexcept {
  switch (v) {
    case DualBoundVariant::binary:
      return "binary";
    case DualBoundVariant::kary_as_stated:
      return "kary-as-stated";
    case DualBoundVariant::kary_proof_consistent:
      return "kary-proof-consistent";
  }
  return "?";
}

DualBoundVariant parse_variant(std::string_view name) {
  for (auto v : {DualBoundVariant::binary, DualBoundVariant::kary_as_stated, DualBoundVariant::kary_proof_consistent}) {
    if (variant_name(v) == name) return v;
  }
  throw ParameterError("unknown bound variant '" + std::string(name) + "'");
}

std::int64_t bound_fc_from_dual(std::uint64_t family_size, const Rational& max_corr, unsigned k, DualBoundVariant variant) {
  if (family_size < 2) throw ParameterError("bound_fc_from_dual: need F >= 2");
  if (max_corr <= Rational(0)) throw ParameterError("bound_fc_from_dual: max correlation must be > 0");
  if (variant != DualBoundVariant::binary && k < 2) throw ParameterError("bound_fc_from_dual: need k >= 2");

  // F / m = F * den / num.
  const u128 num = u128{family_size} * static_cast<std::uint64_t>(max_corr.den());
  const auto den = static_cast<u128>(max_corr.num());
  std::int64_t t = 0;
  if (variant == DualBoundVariant::binary || (variant == DualBoundVariant::kary_as_stated && k == 2)) {
    t = ceil_log(2, num, den);
  } else if (variant == DualBoundVariant::kary_proof_consistent) {
    t = ceil_log(k, num, den);
  } else {
    const long double x = std::log(static_cast<long double>(family_size)) / std::log(static_cast<long double>(k)) -
                          std::log2(static_cast<long double>(max_corr.num()) / max_corr.den());
    const long double nearest = std::nearbyint(x);
    t = static_cast<std::int64_t>(std::fabs(x - nearest) < 1e-9L ? nearest : std::ceil(x));
  }
  return std::max<std::int64_t>(0, t - 1);
}

double bound_phi_thm2(std::uint64_t p, unsigned d, unsigned ell, double c) {
  const double pd = static_cast<double>(p);
  return c * d * ell * std::sqrt(pd) * std::log(pd);
}

LowerEnvelope bound_c_thm2(std::uint64_t p, unsigned d) {
  const double d2 = static_cast<double>(d) * d;
  if (static_cast<double>(p) <= d2) return {0.0, 0.0, true};
  const double v = 0.5 * std::log2(static_cast<double>(p) / d2);
  return {v, v, false};
}

double bound_c_thm3(std::uint64_t p, unsigned d) {
  return 0.5 * (d * std::log2(static_cast<double>(p)) - 2.0 * std::log2(static_cast<double>(d)));
}

double bound_gamma_thm5(std::uint64_t p, unsigned ell, double c) {
  const double pd = static_cast<double>(p);
  return c * ell * std::sqrt(pd) * std::log(pd);
}

LowerEnvelope bound_c_thm5(std::uint64_t p, unsigned d) {
  if (d < 2) throw ParameterError("bound_c_thm5: need d >= 2");
  const double lp = std::log2(static_cast<double>(p));
  const double v = (d / 2.0 - 1.0) * lp - std::log2((d - 1.0) * lp);
  return {v, std::max(v, 0.0), false};
}

double bound_gamma_circ_thm5(std::uint64_t p, unsigned d, unsigned ell, double c) {
  const double pd = static_cast<double>(p);
  return c * ((ell * pd - 1.0) * std::pow(pd, d / 2.0) + pd) / (d * pd);
}

std::string_view strength_name(Strength s) noexcept {
  switch (s) {
    case Strength::exact:
      return "exact";
    case Strength::envelope:
      return "envelope";
    case Strength::asymptotic:
      return "asymptotic";
    case Strength::informational:
      return "informational";
  }
  return "?";
}

std::string_view direction_name(Direction d) noexcept {
  switch (d) {
    case Direction::upper:
      return "upper";
    case Direction::lower:
      return "lower";
    case Direction::equal:
      return "equal";
  }
  return "?";
}

BoundReport weil_check(const poly::Polynomial& h) {
  if (h.degree() < 1) throw ParameterError("weil_check: degree must be >= 1");
  if (!poly::is_squarefree(h)) throw ParameterError("weil_check: h is not square-free (gcd(h, h') != 1)");
  const std::uint64_t p = h.prime();
  std::int64_t sum = 0;
  for (std::uint64_t n = 0; n < p; ++n) sum += ff::legendre(h(n), p);
  const std::int64_t m = h.degree() - 1;
  const std::int64_t abs_sum = sum < 0 ? -sum : sum;

  BoundReport r;
  r.name = "weil";
  r.subject = "polynomial";
  r.strength = Strength::exact;
  r.direction = Direction::upper;
  r.params = {{"p", std::to_string(p)}, {"h", h.to_string()}, {"deg", std::to_string(h.degree())}};
  r.theoretical_value = static_cast<double>(m) * std::sqrt(static_cast<double>(p));
  char buf[64];
  r.theoretical = std::string(buf, std::to_chars(buf, buf + sizeof buf, r.theoretical_value).ptr);
  r.measured = Rational(abs_sum).to_string();
  r.measured_value = static_cast<double>(abs_sum);
  // |S| <= m sqrt(p)  <=>  S^2 <= m^2 p.
  r.satisfied = static_cast<u128>(abs_sum) * abs_sum <= static_cast<u128>(m) * m * p;
  if (r.theoretical_value > 0) r.ratio = r.measured_value / r.theoretical_value;
  r.note = "complete Legendre sum over n = 0..p-1";
  return r;
}

bool all_exact_satisfied(std::span<const BoundReport> reports) {
  for (const auto& r : reports) {
    if (r.strength == Strength::exact && !r.satisfied) return false;
  }
  return true;
}

}  // namespace seqfam::bounds
