#include "seqfam/family.hpp"

#include <map>
#include <numeric>
#include <string>

#include "seqfam/errors.hpp"
#include "seqfam/extension_field.hpp"
#include "seqfam/prime_field.hpp"

namespace seqfam {

namespace {

void validate(const Family::Context& context, std::size_t rows, std::size_t length, const std::vector<Symbol>& symbols) {
  if (context.k == 0 || context.k > kMaxAlphabet) {
    throw ParameterError("alphabet size k = " + std::to_string(context.k) + " outside [1, " +
                         std::to_string(kMaxAlphabet) + "]");
  }
  if (rows == 0 || length == 0) throw ParameterError("family must have F >= 1 and N >= 1");
  if (symbols.size() != rows * length) throw ParameterError("symbol count does not match F * N");
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] >= context.k) {
      throw ParameterError("symbol " + std::to_string(symbols[i]) + " at row " + std::to_string(i / length + 1) +
                           " outside alphabet of size " + std::to_string(context.k));
    }
  }
}

std::vector<Symbol> flatten(const std::vector<std::vector<Symbol>>& rows) {
  std::vector<Symbol> out;
  const std::size_t length = rows.empty() ? 0 : rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != length) throw ParameterError("ragged rows: row " + std::to_string(r + 1));
    out.insert(out.end(), rows[r].begin(), rows[r].end());
  }
  return out;
}

Symbol binary_symbol(int legendre_value, std::size_t row, std::size_t n) {
  if (legendre_value == 0) {
    throw InternalError("zero symbol at row " + std::to_string(row + 1) + ", n = " + std::to_string(n) +
                        " (polynomial has a root in F_p)");
  }
  return legendre_value == 1 ? Symbol{0} : Symbol{1};
}

void enforce_distinct(const Family& fam, const BuildOptions& options) {
  if (!options.require_distinct_rows) return;
  if (auto dup = first_duplicate_rows(fam)) throw DuplicateRowsError(dup->first, dup->second);
}

Family legendre_family(std::uint64_t p, unsigned d, const std::vector<poly::Polynomial>& polys, std::string tag) {
  const std::size_t length = p - 1;
  std::vector<Symbol> symbols(polys.size() * length);
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (std::size_t n = 1; n <= length; ++n) {
      symbols[r * length + n - 1] = binary_symbol(ff::legendre(polys[r](n), p), r, n);
    }
  }
  return Family({p, d, 2, std::move(tag)}, polys.size(), length, std::move(symbols));
}

}  // namespace

Family::Family(Context context, std::size_t rows, std::size_t length, std::vector<Symbol> symbols)
    : context_(std::move(context)), rows_(rows), length_(length), symbols_(std::move(symbols)) {
  validate(context_, rows_, length_, symbols_);
}

Family::Family(Context context, const std::vector<std::vector<Symbol>>& rows)
    : Family(std::move(context), rows.size(), rows.empty() ? 0 : rows.front().size(), flatten(rows)) {}

std::optional<std::pair<std::size_t, std::size_t>> first_duplicate_rows(const Family& fam) {
  std::map<std::vector<Symbol>, std::size_t> first_seen;
  for (std::size_t r = 0; r < fam.size(); ++r) {
    const auto row = fam.row(r);
    auto [it, inserted] = first_seen.emplace(std::vector<Symbol>(row.begin(), row.end()), r);
    if (!inserted) return std::pair{it->second + 1, r + 1};
  }
  return std::nullopt;
}

Family family_f1(std::uint64_t p, unsigned d, const std::optional<poly::Polynomial>& base, const BuildOptions& options) {
  ff::require_odd_prime(p);
  if (d < 5) throw ParameterError("family_f1: degree d = " + std::to_string(d) + " must be >= 5");
  if (d % p == 0) throw ParameterError("family_f1: p = " + std::to_string(p) + " divides d");

  poly::Polynomial f;
  if (base) {
    f = *base;
    if (f.prime() != p) throw ParameterError("family_f1: base polynomial is over a different prime field");
    if (f.degree() != static_cast<int>(d)) throw ParameterError("family_f1: base degree differs from d");
    if (!f.is_monic()) throw ParameterError("family_f1: base must be monic");
    if (f.coeff(d - 1) != 0) throw ParameterError("family_f1: base has a nonzero x^(d-1) coefficient");
    if (f.coeff(d - 2) == 0) throw ParameterError("family_f1: base coefficient a_2 is zero");
    if (f.coeff(d - 3) == 0) throw ParameterError("family_f1: base coefficient a_3 is zero");
    if (!poly::is_irreducible(f)) throw ParameterError("family_f1: base is reducible");
  } else {
    f = poly::find_f1_base(p, d, options.budget);
  }

  std::vector<poly::Polynomial> scaled;
  scaled.reserve(p - 1);
  for (std::uint64_t i = 1; i < p; ++i) scaled.push_back(poly::scale_poly(f, i));
  Family fam = legendre_family(p, d, scaled, "f1");
  enforce_distinct(fam, options);
  return fam;
}

Family family_f2(std::uint64_t p, unsigned d, const BuildOptions& options) {
  ff::require_odd_prime(p);
  if (d < 2) throw ParameterError("family_f2: degree d must be >= 2");
  const auto polys = options.trace_zero ? poly::enumerate_trace_zero_irreducibles(p, d, options.budget)
                                        : poly::enumerate_irreducibles(p, d, options.budget);
  if (polys.empty()) throw ParameterError("family_f2: no irreducible polynomials for these parameters");
  Family fam = legendre_family(p, d, polys, "f2");
  enforce_distinct(fam, options);
  return fam;
}

Family family_k_symbol(std::uint64_t p, unsigned d, unsigned k, const BuildOptions& options) {
  ff::require_odd_prime(p);
  if (!ff::is_prime(d)) throw ParameterError("family_k_symbol: degree d = " + std::to_string(d) + " is not prime");
  if (k == 0 || k > kMaxAlphabet) throw ParameterError("family_k_symbol: alphabet size out of range");
  if ((p - 1) % k != 0) {
    throw ParameterError("family_k_symbol: k = " + std::to_string(k) + " does not divide p - 1 = " +
                         std::to_string(p - 1));
  }
  const auto field = ff::FieldParams::make(p, d);
  const std::uint64_t norm_order = (field->order() - 1) / (p - 1);
  if (options.require_coprime_order && std::gcd(static_cast<std::uint64_t>(k), norm_order) != 1) {
    throw ParameterError("family_k_symbol: gcd(k, (p^d - 1)/(p - 1)) = gcd(" + std::to_string(k) + ", " +
                         std::to_string(norm_order) + ") != 1");
  }

  const ff::CharacterTable chi(p, k);
  const auto reps = poly::conjugacy_representatives(field, true, options.budget);
  const std::size_t length = p - 1;
  std::vector<Symbol> symbols(reps.size() * length);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto minpoly = poly::minimal_polynomial(reps[r]);
    if (!minpoly.generates_field) throw InternalError("representative does not generate F_{p^d}");
    for (std::size_t n = 1; n <= length; ++n) {
      const ff::Residue value = minpoly.poly(n);
      if (value == 0) throw InternalError("minimal polynomial vanishes on F_p");
      symbols[r * length + n - 1] = static_cast<Symbol>(chi(value));
    }
  }
  if (reps.empty()) throw ParameterError("family_k_symbol: empty family");
  Family fam({p, d, k, "ksym"}, reps.size(), length, std::move(symbols));
  enforce_distinct(fam, options);
  return fam;
}

Family dual(const Family& fam) {
  const std::size_t rows = fam.length();
  const std::size_t length = fam.size();
  std::vector<Symbol> symbols(rows * length);
  for (std::size_t r = 0; r < fam.size(); ++r) {
    for (std::size_t n = 0; n < fam.length(); ++n) symbols[n * length + r] = fam.at(r, n);
  }
  Family::Context context = fam.context();
  const std::string& tag = context.construction;
  // dual(dual(x)) unwraps back to x so the transpose is an involution on files too.
  if (tag.size() > 6 && tag.starts_with("dual(") && tag.back() == ')') {
    context.construction = tag.substr(5, tag.size() - 6);
  } else {
    context.construction = "dual(" + tag + ")";
  }
  return Family(std::move(context), rows, length, std::move(symbols));
}

}  // namespace seqfam
