#include <cstdlib>

#include "search.hpp"
#include "seqfam/kernels.hpp"

namespace seqfam::measures {

namespace {

using detail::Local;

constexpr std::uint64_t kMaxPatternSpace = std::uint64_t{1} << 24;

std::uint64_t pattern_space(unsigned k, unsigned ell, const char* name) {
  const std::uint64_t space = detail::sat_pow(k, ell);
  if (space > kMaxPatternSpace) {
    throw ParameterError(std::string(name) + ": k^l = " + std::to_string(k) + "^" + std::to_string(ell) +
                         " patterns is too many");
  }
  return space;
}

// Score is |K * count_W(M) - M| with K = k^l; the measure is score / K.
//
// For fixed (I, D), a maximizer (M, W) is always one of: W = c_M (deviation
// just rose), W = c_{M+1} (deviation about to fall), or M = L. So the scan
// only looks at those candidates.
class GammaEval {
 public:
  GammaEval(const Family& fam, unsigned ell, bool circ, std::uint64_t space)
      : fam_(fam), ell_(ell), circ_(circ), space_(space), codes_(fam.length()), counts_(space), ptrs_(ell) {}

  std::optional<Local<std::int64_t>> operator()(const std::uint32_t* rows, const std::uint32_t* shifts,
                                                std::uint64_t) {
    const std::size_t n = fam_.length();
    const std::size_t len = circ_ ? n : n - shifts[ell_ - 1];
    for (unsigned j = 0; j < ell_; ++j) ptrs_[j] = fam_.row(rows[j]).data() + shifts[j];
    kernels::pattern_codes(ptrs_, len, fam_.alphabet(), codes_.data());
    std::fill(counts_.begin(), counts_.end(), 0);
    const auto big_k = static_cast<std::int64_t>(space_);

    Local<std::int64_t> best{-1, 0, 0};
    auto consider = [&](std::size_t m, std::uint64_t w) {
      const std::int64_t score = std::llabs(big_k * counts_[w] - static_cast<std::int64_t>(m));
      if (score > best.score || (score == best.score && m == best.window && w < best.tag)) best = {score, m, w};
    };

    if (circ_) {
      for (std::size_t i = 0; i < len; ++i) ++counts_[codes_[i]];
      for (std::uint64_t w = 0; w < space_; ++w) consider(len, w);
      return best;
    }
    for (std::size_t m = 1; m <= len; ++m) {
      const std::uint32_t here = codes_[m - 1];
      ++counts_[here];
      if (m == len) {
        for (std::uint64_t w = 0; w < space_; ++w) consider(m, w);
      } else {
        const std::uint32_t next = codes_[m];
        if (next < here) {
          consider(m, next);
          consider(m, here);
        } else {
          consider(m, here);
          consider(m, next);
        }
      }
    }
    return best;
  }

 private:
  const Family& fam_;
  unsigned ell_;
  bool circ_;
  std::uint64_t space_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::int64_t> counts_;
  std::vector<const Symbol*> ptrs_;
};

MeasureResult gamma_impl(const Family& fam, unsigned ell, const EvalOptions& options, bool circ) {
  detail::require_order(ell);
  const char* name = circ ? "gamma_circ" : "gamma";
  const std::uint64_t space = pattern_space(fam.alphabet(), ell, name);
  const detail::SearchShape shape{ell, circ};
  detail::check_budget(
      detail::sat_mul(detail::tuple_count(fam, shape, options), detail::sat_add(fam.length(), space)),
      options.budget, name);

  const auto best = detail::run_search<std::int64_t>(fam, shape, options, 0,
                                                     [&] { return GammaEval(fam, ell, circ, space); });
  MeasureResult r;
  r.name = name;
  r.order = ell;
  r.mode = options.mode;
  if (best) {
    r.value = Rational(best->score, static_cast<std::int64_t>(space));
    auto spec = detail::to_spec(best->rows, best->shifts, best->window);
    spec.pattern.assign(ell, 0);
    std::uint64_t code = best->tag;
    for (unsigned j = ell; j-- > 0;) {
      spec.pattern[j] = static_cast<Symbol>(code % fam.alphabet());
      code /= fam.alphabet();
    }
    r.witness = std::move(spec);
  }
  r.approx = r.value.to_double();
  return r;
}

}  // namespace

MeasureResult gamma(const Family& fam, unsigned ell, const EvalOptions& options) {
  return gamma_impl(fam, ell, options, false);
}

MeasureResult gamma_circ(const Family& fam, unsigned ell, const EvalOptions& options) {
  return gamma_impl(fam, ell, options, true);
}

}  // namespace seqfam::measures
