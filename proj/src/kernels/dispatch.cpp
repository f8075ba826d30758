#include <atomic>
#include <string>

#include "seqfam/errors.hpp"
#include "seqfam/kernels.hpp"

namespace seqfam::kernels {

namespace {

Isa detect() noexcept {
#if defined(SEQFAM_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return detect() == Isa::avx2;
  }
  return false;
}

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) throw ParameterError("kernel ISA '" + std::string(isa_name(isa)) + "' not supported here");
  selected().store(isa, std::memory_order_relaxed);
}

void sum_mod_k(std::span<const Symbol* const> rows, std::size_t len, unsigned k, Symbol* out) {
#if defined(SEQFAM_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::sum_mod_k(rows, len, k, out);
#endif
  scalar::sum_mod_k(rows, len, k, out);
}

void pattern_codes(std::span<const Symbol* const> rows, std::size_t len, unsigned k, std::uint32_t* out) {
#if defined(SEQFAM_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::pattern_codes(rows, len, k, out);
#endif
  scalar::pattern_codes(rows, len, k, out);
}

PrefixPeak signed_prefix_peak(const Symbol* bits, std::size_t len) {
#if defined(SEQFAM_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::signed_prefix_peak(bits, len);
#endif
  return scalar::signed_prefix_peak(bits, len);
}

}  // namespace seqfam::kernels
