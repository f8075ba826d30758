#pragma once

// Exhaustive / sampled search over (I, D) tuples with a deterministic
// max-reduction. Each measure supplies an evaluator that, for one (I, D),
// returns its best (score, M, tag); the driver keeps the best candidate under
// (score desc, I, D, M, tag asc), so the result does not depend on threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "seqfam/errors.hpp"
#include "seqfam/family.hpp"
#include "seqfam/measures.hpp"

namespace seqfam::measures::detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

inline void check_budget(std::uint64_t estimate, std::uint64_t budget, const std::string& what) {
  if (estimate > budget) {
    throw BudgetError(what + ": exhaustive evaluation over budget", estimate, budget);
  }
}

/// All nondecreasing tuples over [0, length), lex order, flattened.
std::vector<std::uint32_t> shift_tuples(std::size_t length, unsigned ell);

/// equal[a * F + b] = rows a and b are identical sequences.
std::vector<char> equal_rows(const Family& fam);

inline bool admissible_tuple(const std::vector<char>& equal, std::size_t f, const std::uint32_t* rows,
                             const std::uint32_t* shifts, unsigned ell) {
  for (unsigned a = 0; a < ell; ++a) {
    for (unsigned b = a + 1; b < ell; ++b) {
      if (shifts[a] == shifts[b] && equal[std::size_t{rows[a]} * f + rows[b]]) return false;
    }
  }
  return true;
}

template <class Score>
struct Local {
  Score score{};
  std::size_t window = 0;
  std::uint64_t tag = 0;
};

template <class Score>
struct Candidate {
  Score score{};
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> shifts;
  std::size_t window = 0;
  std::uint64_t tag = 0;
};

/// a beats b: larger score (beyond eps), then smaller (I, D, M, tag).
template <class Score>
bool beats(const Candidate<Score>& a, const Candidate<Score>& b, Score eps) {
  if (a.score > b.score + eps) return true;
  if (b.score > a.score + eps) return false;
  if (a.rows != b.rows) return a.rows < b.rows;
  if (a.shifts != b.shifts) return a.shifts < b.shifts;
  if (a.window != b.window) return a.window < b.window;
  return a.tag < b.tag;
}

struct SearchShape {
  unsigned ell = 1;
  bool circ = false;  // D = 0, M = N only
};

/// Number of (I, D) evaluations in exact mode (before admissibility filtering).
inline std::uint64_t exact_tuple_count(const Family& fam, const SearchShape& shape) {
  const std::uint64_t ids = sat_pow(fam.size(), shape.ell);
  return shape.circ ? ids : sat_mul(ids, shift_tuple_count(fam.length(), shape.ell));
}

inline std::uint64_t tuple_count(const Family& fam, const SearchShape& shape, const EvalOptions& options) {
  return options.mode == Mode::sampled ? options.samples : exact_tuple_count(fam, shape);
}

inline unsigned worker_count(const EvalOptions& options, std::size_t chunks) {
  unsigned t = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(chunks, 1)));
}

/// Runs the search. MakeEval() -> evaluator with
///   std::optional<Local<Score>> operator()(const std::uint32_t* rows, const std::uint32_t* shifts, std::uint64_t sample)
/// `sample` is the sample index in sampled mode (for evaluators that sample more
/// than (I, D)), otherwise 0.
template <class Score, class MakeEval>
std::optional<Candidate<Score>> run_search(const Family& fam, const SearchShape& shape, const EvalOptions& options,
                                           Score eps, MakeEval make_eval) {
  const unsigned ell = shape.ell;
  const std::size_t f = fam.size();
  const std::size_t n = fam.length();
  if (f == 0 || n == 0) return std::nullopt;
  const auto equal = equal_rows(fam);

  const std::vector<std::uint32_t> shifts =
      shape.circ ? std::vector<std::uint32_t>(ell, 0) : shift_tuples(n, ell);
  const std::size_t shift_count = shifts.size() / ell;

  // Work items: exact mode = index tuples I (mixed radix F, first index most
  // significant); sampled mode = sample numbers, each drawing (I, D) from its
  // own seeded generator so chunking cannot change the draws.
  const bool sampled = options.mode == Mode::sampled;
  const std::uint64_t items = sampled ? options.samples : static_cast<std::uint64_t>(exact_tuple_count(fam, {ell, true}));
  constexpr std::uint64_t kChunks = 512;
  const std::uint64_t chunk_size = std::max<std::uint64_t>(1, (items + kChunks - 1) / kChunks);
  const std::uint64_t chunk_total = (items + chunk_size - 1) / chunk_size;

  std::vector<std::optional<Candidate<Score>>> best(chunk_total);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    auto eval = make_eval();
    std::vector<std::uint32_t> rows(ell);
    std::vector<std::uint32_t> drawn(ell);
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunk_total) return;
      std::optional<Candidate<Score>> top;
      auto offer = [&](const std::uint32_t* d, std::uint64_t sample) {
        if (!admissible_tuple(equal, f, rows.data(), d, ell)) return;
        auto local = eval(rows.data(), d, sample);
        if (!local) return;
        Candidate<Score> cand{local->score, rows, std::vector<std::uint32_t>(d, d + ell), local->window, local->tag};
        if (!top || beats(cand, *top, eps)) top = std::move(cand);
      };
      const std::uint64_t lo = c * chunk_size;
      const std::uint64_t hi = std::min(items, lo + chunk_size);
      for (std::uint64_t item = lo; item < hi; ++item) {
        if (sampled) {
          std::mt19937_64 rng(options.seed ^ (item * 0x9E3779B97F4A7C15ull));
          std::uniform_int_distribution<std::uint32_t> row_dist(0, static_cast<std::uint32_t>(f - 1));
          for (auto& r : rows) r = row_dist(rng);
          if (shape.circ) {
            std::fill(drawn.begin(), drawn.end(), 0u);
          } else {
            std::uniform_int_distribution<std::uint32_t> shift_dist(0, static_cast<std::uint32_t>(n - 1));
            for (auto& s : drawn) s = shift_dist(rng);
            std::sort(drawn.begin(), drawn.end());
          }
          offer(drawn.data(), item);
        } else {
          std::uint64_t code = item;
          for (unsigned j = ell; j-- > 0;) {
            rows[j] = static_cast<std::uint32_t>(code % f);
            code /= f;
          }
          for (std::size_t s = 0; s < shift_count; ++s) offer(shifts.data() + s * ell, 0);
        }
      }
      best[c] = std::move(top);
    }
  };

  const unsigned workers = worker_count(options, static_cast<std::size_t>(chunk_total));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::optional<Candidate<Score>> result;
  for (auto& b : best) {
    if (b && (!result || beats(*b, *result, eps))) result = std::move(b);
  }
  return result;
}

/// Converts a candidate to the public witness (1-based rows).
inline CorrelationSpec to_spec(const std::vector<std::uint32_t>& rows, const std::vector<std::uint32_t>& shifts,
                               std::size_t window) {
  CorrelationSpec spec;
  spec.window = window;
  spec.shifts.assign(shifts.begin(), shifts.end());
  spec.rows.reserve(rows.size());
  for (auto r : rows) spec.rows.push_back(std::size_t{r} + 1);
  return spec;
}

inline void require_order(unsigned ell) {
  if (ell == 0) throw ParameterError("measure order l must be >= 1");
}

}  // namespace seqfam::measures::detail
