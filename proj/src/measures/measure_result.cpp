#include <charconv>

#include "seqfam/errors.hpp"
#include "seqfam/measures.hpp"

namespace seqfam::measures {

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::exact ? "exact" : "sampled-lower-bound";
}

std::string MeasureResult::value_string() const {
  if (value_exact) return value.to_string();
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, approx);
  return std::string(buf, res.ptr);
}

MeasureResult compute(const Family& fam, std::string_view name, unsigned ell, const EvalOptions& options) {
  if (name == "fc") return f_complexity(fam, options);
  if (name == "phi") return cross_correlation(fam, ell, options);
  if (name == "phi_circ") return cross_correlation_circ(fam, ell, options);
  if (name == "gamma") return gamma(fam, ell, options);
  if (name == "gamma_circ") return gamma_circ(fam, ell, options);
  if (name == "big_gamma") return big_gamma(fam, ell, options);
  throw ParameterError("unknown measure '" + std::string(name) +
                       "' (expected fc, phi, phi_circ, gamma, gamma_circ, big_gamma)");
}

}  // namespace seqfam::measures
