#include <cmath>
#include <numbers>

#include "search.hpp"
#include "seqfam/kernels.hpp"

namespace seqfam::measures {

namespace {

using detail::Local;

// Multiplying phi_j by a root of unity scales every term by the same root, so
// |G| only depends on phi_j up to rotation. The search therefore runs over
// bijections with phi_j(0) = root index 0: ((k - 1)!)^l of them.
std::vector<std::vector<unsigned>> canonical_bijections(unsigned k) {
  std::vector<unsigned> perm(k);
  for (unsigned i = 0; i < k; ++i) perm[i] = i;
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(perm);
  } while (k > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

struct Tables {
  unsigned k = 0;
  unsigned ell = 0;
  std::uint64_t space = 0;                       // k^l pattern codes
  std::uint64_t choices = 0;                     // ((k-1)!)^l bijection tuples
  std::vector<std::vector<unsigned>> perms;      // canonical bijections of one symbol
  std::vector<std::uint8_t> root;                // root[c * space + code] = sum_j phi_j(w_j) mod k
  std::vector<double> cos_table;
  std::vector<double> sin_table;

  std::vector<std::vector<unsigned>> decode(std::uint64_t choice) const {
    std::vector<std::vector<unsigned>> out(ell);
    for (unsigned j = ell; j-- > 0;) {
      out[j] = perms[choice % perms.size()];
      choice /= perms.size();
    }
    return out;
  }
};

Tables make_tables(unsigned k, unsigned ell) {
  Tables t;
  t.k = k;
  t.ell = ell;
  t.space = detail::sat_pow(k, ell);
  t.perms = canonical_bijections(k);
  t.choices = detail::sat_pow(t.perms.size(), ell);
  if (detail::sat_mul(t.space, t.choices) > (std::uint64_t{1} << 26)) {
    throw BudgetError("big_gamma: bijection table for k = " + std::to_string(k) + ", l = " + std::to_string(ell) +
                          " is too large",
                      detail::sat_mul(t.space, t.choices), std::uint64_t{1} << 26);
  }
  t.root.resize(t.space * t.choices);
  for (std::uint64_t c = 0; c < t.choices; ++c) {
    const auto phi = t.decode(c);
    for (std::uint64_t code = 0; code < t.space; ++code) {
      unsigned sum = 0;
      std::uint64_t rest = code;
      for (unsigned j = ell; j-- > 0;) {
        sum += phi[j][rest % k];
        rest /= k;
      }
      t.root[c * t.space + code] = static_cast<std::uint8_t>(sum % k);
    }
  }
  for (unsigned r = 0; r < k; ++r) {
    const double angle = 2.0 * std::numbers::pi * r / k;
    t.cos_table.push_back(std::cos(angle));
    t.sin_table.push_back(std::sin(angle));
  }
  return t;
}

class BigGammaEval {
 public:
  BigGammaEval(const Family& fam, unsigned ell, const Tables& tables, const EvalOptions& options, double eps)
      : fam_(fam), ell_(ell), tables_(tables), options_(options), eps_(eps), codes_(fam.length()),
        counts_(tables.k), ptrs_(ell) {}

  std::optional<Local<double>> operator()(const std::uint32_t* rows, const std::uint32_t* shifts,
                                          std::uint64_t sample) {
    const std::size_t len = fam_.length() - shifts[ell_ - 1];
    for (unsigned j = 0; j < ell_; ++j) ptrs_[j] = fam_.row(rows[j]).data() + shifts[j];
    kernels::pattern_codes(ptrs_, len, tables_.k, codes_.data());

    std::uint64_t lo = 0;
    std::uint64_t hi = tables_.choices;
    if (options_.mode == Mode::sampled) {
      std::mt19937_64 rng(options_.seed + 0xD1B54A32D192ED03ull * (sample + 1));
      lo = std::uniform_int_distribution<std::uint64_t>(0, tables_.choices - 1)(rng);
      hi = lo + 1;
    }

    Local<double> best{-1.0, 0, 0};
    for (std::uint64_t c = lo; c < hi; ++c) {
      const std::uint8_t* root = tables_.root.data() + c * tables_.space;
      std::fill(counts_.begin(), counts_.end(), 0);
      // Best over M for this bijection tuple: first M attaining the maximum.
      double top = -1.0;
      std::size_t top_m = 0;
      for (std::size_t m = 1; m <= len; ++m) {
        ++counts_[root[codes_[m - 1]]];
        const double mag = magnitude();
        if (mag > top + eps_) {
          top = mag;
          top_m = m;
        }
      }
      if (top > best.score + eps_ ||
          (top >= best.score - eps_ && std::pair(top_m, c) < std::pair(best.window, best.tag))) {
        best = {top, top_m, c};
      }
    }
    return best;
  }

 private:
  // |sum_r counts[r] * w^r|, from exact integer counts.
  double magnitude() const {
    if (tables_.k == 1) return static_cast<double>(counts_[0]);
    if (tables_.k == 2) return static_cast<double>(std::llabs(counts_[0] - counts_[1]));
    double re = 0.0;
    double im = 0.0;
    for (unsigned r = 0; r < tables_.k; ++r) {
      re += static_cast<double>(counts_[r]) * tables_.cos_table[r];
      im += static_cast<double>(counts_[r]) * tables_.sin_table[r];
    }
    return std::hypot(re, im);
  }

  const Family& fam_;
  unsigned ell_;
  const Tables& tables_;
  const EvalOptions& options_;
  double eps_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::int64_t> counts_;
  std::vector<const Symbol*> ptrs_;
};

}  // namespace

MeasureResult big_gamma(const Family& fam, unsigned ell, const EvalOptions& options) {
  detail::require_order(ell);
  const unsigned k = fam.alphabet();
  const Tables tables = make_tables(k, ell);
  const detail::SearchShape shape{ell, false};
  const std::uint64_t per_tuple = options.mode == Mode::sampled ? 1 : tables.choices;
  const std::uint64_t inner = detail::sat_mul(fam.length(), k);
  detail::check_budget(detail::sat_mul(detail::sat_mul(detail::tuple_count(fam, shape, options), per_tuple),
                                       detail::sat_add(inner, tables.space)),
                       options.budget, "big_gamma");

  const bool exact_values = k <= 2;
  const double eps = exact_values ? 0.0 : ell * static_cast<double>(fam.length()) * std::ldexp(1.0, -50);
  const auto best = detail::run_search<double>(
      fam, shape, options, eps, [&] { return BigGammaEval(fam, ell, tables, options, eps); });

  MeasureResult r;
  r.name = "big_gamma";
  r.order = ell;
  r.mode = options.mode;
  r.value_exact = exact_values;
  r.error_bound = eps;
  if (best) {
    r.approx = best->score;
    if (exact_values) r.value = Rational(std::llround(best->score));
    auto spec = detail::to_spec(best->rows, best->shifts, best->window);
    spec.bijections = tables.decode(best->tag);
    r.witness = std::move(spec);
  } else {
    // no admissible tuple: the max over an empty set is exactly 0
    r.value_exact = true;
    r.error_bound = 0.0;
  }
  if (exact_values) r.approx = r.value.to_double();
  return r;
}

}  // namespace seqfam::measures
