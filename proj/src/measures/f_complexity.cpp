#include <bit>

#include "search.hpp"

namespace seqfam::measures {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  unsigned __int128 v = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    v = v * (n - r + i) / i;
    if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(v);
}

/// Largest j with k^j <= F (k >= 2, F >= 1).
std::size_t floor_log(unsigned k, std::size_t f) {
  std::size_t j = 0;
  unsigned __int128 power = k;
  while (power <= f) {
    ++j;
    power *= k;
  }
  return j;
}

/// First (positions, pattern) of size j that no row realizes, in lex order of
/// positions then pattern (first position most significant).
std::optional<SpecificationPattern> first_uncovered(const Family& fam, std::size_t j) {
  const unsigned k = fam.alphabet();
  const std::size_t n = fam.length();
  const std::uint64_t space = detail::sat_pow(k, static_cast<unsigned>(j));
  std::vector<char> seen(space);
  std::vector<std::size_t> pos(j);
  for (std::size_t t = 0; t < j; ++t) pos[t] = t;
  for (;;) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t distinct = 0;
    for (std::size_t r = 0; r < fam.size() && distinct < space; ++r) {
      std::uint64_t code = 0;
      for (auto q : pos) code = code * k + fam.at(r, q);
      if (!seen[code]) {
        seen[code] = 1;
        ++distinct;
      }
    }
    if (distinct < space) {
      std::uint64_t code = 0;
      while (seen[code]) ++code;
      SpecificationPattern w;
      w.symbols.assign(j, 0);
      for (std::size_t t = j; t-- > 0;) {
        w.symbols[t] = static_cast<Symbol>(code % k);
        code /= k;
      }
      for (auto q : pos) w.positions.push_back(q + 1);
      return w;
    }
    std::size_t t = j;
    while (t > 0 && pos[t - 1] == n - j + t - 1) --t;
    if (t == 0) return std::nullopt;
    ++pos[t - 1];
    for (std::size_t u = t; u < j; ++u) pos[u] = pos[u - 1] + 1;
  }
}

}  // namespace

MeasureResult f_complexity(const Family& fam, const EvalOptions& options) {
  const unsigned k = fam.alphabet();
  const std::size_t n = fam.length();
  MeasureResult r;
  r.name = "fc";
  r.order = 0;
  r.mode = Mode::exact;

  // A one-letter alphabet is covered at every size.
  if (k == 1 || fam.size() == 0) {
    r.value = Rational(static_cast<std::int64_t>(k == 1 ? n : 0));
    if (k != 1 && n > 0) r.witness = SpecificationPattern{{1}, {0}};
    r.approx = r.value.to_double();
    return r;
  }

  // k^C <= F, so sizes above floor(log_k F) fail without checking every tuple.
  const std::size_t cap = std::min(n, floor_log(k, fam.size()));
  std::uint64_t spent = 0;
  for (std::size_t j = 1; j <= std::min(n, cap + 1); ++j) {
    if (j <= cap) {
      const std::uint64_t cost = detail::sat_mul(
          detail::sat_mul(binomial(n, j), detail::sat_pow(k, static_cast<unsigned>(j))), fam.size());
      spent = detail::sat_add(spent, cost);
      if (spent > options.budget) {
        throw BudgetError("fc: could not certify size " + std::to_string(j) + "; C >= " + std::to_string(j - 1),
                          spent, options.budget, static_cast<std::int64_t>(j - 1));
      }
    }
    if (auto w = first_uncovered(fam, j)) {
      r.value = Rational(static_cast<std::int64_t>(j - 1));
      r.witness = std::move(*w);
      r.approx = r.value.to_double();
      return r;
    }
  }
  r.value = Rational(static_cast<std::int64_t>(std::min(n, cap)));
  r.approx = r.value.to_double();
  return r;
}

}  // namespace seqfam::measures
