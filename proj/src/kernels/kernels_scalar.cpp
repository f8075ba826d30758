#include <cstdlib>

#include "seqfam/kernels.hpp"

namespace seqfam::kernels::scalar {

void sum_mod_k(std::span<const Symbol* const> rows, std::size_t len, unsigned k, Symbol* out) {
  for (std::size_t n = 0; n < len; ++n) {
    unsigned acc = 0;
    for (const Symbol* row : rows) acc += row[n];
    out[n] = static_cast<Symbol>(acc % k);
  }
}

void pattern_codes(std::span<const Symbol* const> rows, std::size_t len, unsigned k, std::uint32_t* out) {
  for (std::size_t n = 0; n < len; ++n) {
    std::uint32_t code = 0;
    for (const Symbol* row : rows) code = code * k + row[n];
    out[n] = code;
  }
}

PrefixPeak signed_prefix_peak(const Symbol* bits, std::size_t len) {
  PrefixPeak best;
  std::int64_t sum = 0;
  for (std::size_t n = 0; n < len; ++n) {
    sum += bits[n] ? -1 : 1;
    const std::int64_t magnitude = sum < 0 ? -sum : sum;
    if (magnitude > best.peak) {
      best.peak = magnitude;
      best.window = n + 1;
    }
  }
  return best;
}

}  // namespace seqfam::kernels::scalar
