#pragma once

// Data-parallel inner loops of the correlation searches. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant; the
// dispatched entry points pick one at runtime. Variants must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace seqfam::kernels {

using Symbol = std::uint8_t;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
/// Best supported ISA unless overridden with set_isa.
Isa active_isa() noexcept;
/// Forces an ISA; throws ParameterError if the CPU lacks it.
void set_isa(Isa isa);

/// Largest |S_M| over the prefix sums S_M = v_1 + ... + v_M, M = 1..len, and the
/// smallest M attaining it (0 when len == 0).
struct PrefixPeak {
  std::int64_t peak = 0;
  std::size_t window = 0;
  friend bool operator==(const PrefixPeak&, const PrefixPeak&) = default;
};

/// out[n] = (rows[0][n] + ... + rows[l-1][n]) mod k. Inputs < k <= 128.
/// For k = 2 this is the symbol of the product of the +-1 values.
void sum_mod_k(std::span<const Symbol* const> rows, std::size_t len, unsigned k, Symbol* out);

/// out[n] = Horner code of (rows[0][n], ..., rows[l-1][n]) in base k, first row
/// most significant. Caller guarantees k^l < 2^32.
void pattern_codes(std::span<const Symbol* const> rows, std::size_t len, unsigned k, std::uint32_t* out);

/// Prefix peak of v_n = (-1)^bits[n], bits in {0, 1}.
PrefixPeak signed_prefix_peak(const Symbol* bits, std::size_t len);

namespace scalar {
void sum_mod_k(std::span<const Symbol* const> rows, std::size_t len, unsigned k, Symbol* out);
void pattern_codes(std::span<const Symbol* const> rows, std::size_t len, unsigned k, std::uint32_t* out);
PrefixPeak signed_prefix_peak(const Symbol* bits, std::size_t len);
}  // namespace scalar

#if defined(SEQFAM_HAVE_AVX2)
namespace avx2 {
void sum_mod_k(std::span<const Symbol* const> rows, std::size_t len, unsigned k, Symbol* out);
void pattern_codes(std::span<const Symbol* const> rows, std::size_t len, unsigned k, std::uint32_t* out);
PrefixPeak signed_prefix_peak(const Symbol* bits, std::size_t len);
}  // namespace avx2
#endif

}  // namespace seqfam::kernels
