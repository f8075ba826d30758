#include <cstdlib>

#include "search.hpp"
#include "seqfam/kernels.hpp"

namespace seqfam::measures {

namespace detail {

std::vector<std::uint32_t> shift_tuples(std::size_t length, unsigned ell) {
  std::vector<std::uint32_t> out;
  if (length == 0) return out;
  std::vector<std::uint32_t> d(ell, 0);
  for (;;) {
    out.insert(out.end(), d.begin(), d.end());
    // Next nondecreasing tuple: bump the last position that can grow and reset
    // the tail to its value.
    unsigned j = ell;
    while (j > 0 && d[j - 1] + 1 >= length) --j;
    if (j == 0) return out;
    const std::uint32_t v = d[j - 1] + 1;
    for (unsigned t = j - 1; t < ell; ++t) d[t] = v;
  }
}

std::vector<char> equal_rows(const Family& fam) {
  const std::size_t f = fam.size();
  std::vector<char> eq(f * f, 0);
  for (std::size_t a = 0; a < f; ++a) {
    eq[a * f + a] = 1;
    for (std::size_t b = a + 1; b < f; ++b) {
      const auto ra = fam.row(a);
      const auto rb = fam.row(b);
      const bool same = std::equal(ra.begin(), ra.end(), rb.begin());
      eq[a * f + b] = eq[b * f + a] = same ? 1 : 0;
    }
  }
  return eq;
}

}  // namespace detail

std::uint64_t shift_tuple_count(std::size_t length, unsigned ell) {
  // C(N + l - 1, l), saturating.
  if (length == 0) return 0;
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= ell; ++i) {
    r = r * (length - 1 + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

bool admissible(const Family& fam, std::span<const std::size_t> rows, std::span<const std::size_t> shifts) {
  if (rows.size() != shifts.size()) return false;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (shifts[a] != shifts[b]) continue;
      const auto ra = fam.row(rows[a]);
      const auto rb = fam.row(rows[b]);
      if (std::equal(ra.begin(), ra.end(), rb.begin())) return false;
    }
  }
  return true;
}

namespace {

using detail::Local;

class PhiEval {
 public:
  PhiEval(const Family& fam, unsigned ell, bool circ)
      : fam_(fam), ell_(ell), circ_(circ), buf_(fam.length()), ptrs_(ell) {}

  std::optional<Local<std::int64_t>> operator()(const std::uint32_t* rows, const std::uint32_t* shifts,
                                                std::uint64_t) {
    const std::size_t n = fam_.length();
    const std::size_t len = circ_ ? n : n - shifts[ell_ - 1];
    for (unsigned j = 0; j < ell_; ++j) ptrs_[j] = fam_.row(rows[j]).data() + shifts[j];
    kernels::sum_mod_k(ptrs_, len, 2, buf_.data());
    if (circ_) {
      std::int64_t ones = 0;
      for (std::size_t i = 0; i < len; ++i) ones += buf_[i];
      return Local<std::int64_t>{std::llabs(static_cast<std::int64_t>(len) - 2 * ones), len, 0};
    }
    const auto peak = kernels::signed_prefix_peak(buf_.data(), len);
    return Local<std::int64_t>{peak.peak, peak.window, 0};
  }

 private:
  const Family& fam_;
  unsigned ell_;
  bool circ_;
  std::vector<Symbol> buf_;
  std::vector<const Symbol*> ptrs_;
};

MeasureResult phi_impl(const Family& fam, unsigned ell, const EvalOptions& options, bool circ) {
  detail::require_order(ell);
  const char* name = circ ? "phi_circ" : "phi";
  if (fam.alphabet() != 2) {
    throw ParameterError(std::string(name) + " needs a binary family (k = 2); use gamma or big_gamma for k = " +
                         std::to_string(fam.alphabet()));
  }
  const detail::SearchShape shape{ell, circ};
  detail::check_budget(detail::sat_mul(detail::tuple_count(fam, shape, options), fam.length()), options.budget,
                       name);

  const auto best = detail::run_search<std::int64_t>(fam, shape, options, 0,
                                                     [&] { return PhiEval(fam, ell, circ); });
  MeasureResult r;
  r.name = name;
  r.order = ell;
  r.mode = options.mode;
  if (best) {
    r.value = Rational(best->score);
    r.witness = detail::to_spec(best->rows, best->shifts, best->window);
  }
  r.approx = r.value.to_double();
  return r;
}

}  // namespace

MeasureResult cross_correlation(const Family& fam, unsigned ell, const EvalOptions& options) {
  return phi_impl(fam, ell, options, false);
}

MeasureResult cross_correlation_circ(const Family& fam, unsigned ell, const EvalOptions& options) {
  return phi_impl(fam, ell, options, true);
}

}  // namespace seqfam::measures
