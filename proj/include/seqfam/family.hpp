#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqfam/irreducible.hpp"
#include "seqfam/polynomial.hpp"

namespace seqfam {

using Symbol = std::uint8_t;

/// Largest supported alphabet; symbol indices must fit a byte.
inline constexpr unsigned kMaxAlphabet = 128;

/// F sequences of length N over the alphabet {0, ..., k-1}.
///
/// Binary families use k = 2 with symbol 0 standing for +1 and 1 for -1.
/// Storage is row-major and contiguous; rows are addressed 0-based in code
/// and 1-based in files, witnesses and reports.
class Family {
 public:
  struct Context {
    std::uint64_t p = 0;  // 0 when unknown (external families)
    unsigned d = 0;
    unsigned k = 2;
    std::string construction = "external";
  };

  Family(Context context, std::size_t rows, std::size_t length, std::vector<Symbol> symbols);
  Family(Context context, const std::vector<std::vector<Symbol>>& rows);

  std::size_t size() const noexcept { return rows_; }     // F
  std::size_t length() const noexcept { return length_; }  // N
  unsigned alphabet() const noexcept { return context_.k; }
  std::uint64_t prime() const noexcept { return context_.p; }
  unsigned degree() const noexcept { return context_.d; }
  const std::string& construction() const noexcept { return context_.construction; }
  const Context& context() const noexcept { return context_; }

  Symbol at(std::size_t row, std::size_t n) const noexcept { return symbols_[row * length_ + n]; }
  std::span<const Symbol> row(std::size_t r) const noexcept {
    return {symbols_.data() + r * length_, length_};
  }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Family& a, const Family& b) {
    return a.rows_ == b.rows_ && a.length_ == b.length_ && a.context_.k == b.context_.k &&
           a.context_.p == b.context_.p && a.context_.d == b.context_.d &&
           a.context_.construction == b.context_.construction && a.symbols_ == b.symbols_;
  }

  /// Compares only shape, alphabet and symbols.
  bool same_sequences(const Family& other) const noexcept {
    return rows_ == other.rows_ && length_ == other.length_ && context_.k == other.context_.k &&
           symbols_ == other.symbols_;
  }

 private:
  Context context_;
  std::size_t rows_;
  std::size_t length_;
  std::vector<Symbol> symbols_;
};

/// Positions i_1 < ... < i_j (1-based) with prescribed symbols.
struct SpecificationPattern {
  std::vector<std::size_t> positions;
  std::vector<Symbol> symbols;
  friend bool operator==(const SpecificationPattern&, const SpecificationPattern&) = default;
};

/// First pair (1-based, a < b) of identical rows, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_duplicate_rows(const Family& fam);

struct BuildOptions {
  poly::EnumerationBudget budget{};
  /// Throw DuplicateRowsError when two rows coincide.
  bool require_distinct_rows = true;
  /// family_f2: restrict to trace-zero irreducibles (false = all nonconjugate beta).
  bool trace_zero = true;
  /// family_k_symbol: enforce gcd(k, (p^d - 1)/(p - 1)) = 1.
  bool require_coprime_order = true;
};

/// Rows (legendre(f_i(n)))_{n=1}^{p-1} for f_i = i^d f(X/i), i = 1..p-1.
/// Without a base, the first valid one from poly::find_f1_base is used.
Family family_f1(std::uint64_t p, unsigned d, const std::optional<poly::Polynomial>& base = std::nullopt,
                 const BuildOptions& options = {});

/// Rows (legendre(f(n)))_{n=1}^{p-1} for f in Omega, lexicographic order.
Family family_f2(std::uint64_t p, unsigned d, const BuildOptions& options = {});

/// Rows (chi_k(f_beta(n)))_{n=1}^{p-1} over trace-zero nonconjugate beta of
/// degree d, in the order of poly::conjugacy_representatives.
Family family_k_symbol(std::uint64_t p, unsigned d, unsigned k, const BuildOptions& options = {});

/// Transpose; dual(dual(f)) == f.
Family dual(const Family& fam);

/// Family file: header `#PRSFAM v1 p=.. d=.. k=.. N=.. F=.. construction=..`
/// then F lines of N space-separated symbols, LF endings.
void write_family(const Family& fam, std::ostream& out);
Family read_family(std::istream& in);

void write_family_file(const Family& fam, const std::string& path);
Family read_family_file(const std::string& path);

}  // namespace seqfam
