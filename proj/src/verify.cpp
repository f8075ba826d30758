#include <charconv>
#include <cmath>

#include "seqfam/bounds.hpp"
#include "seqfam/errors.hpp"
#include "seqfam/irreducible.hpp"

namespace seqfam::bounds {

namespace {

using measures::MeasureResult;
using measures::Mode;

std::string fmt(double v) {
  char buf[64];
  return std::string(buf, std::to_chars(buf, buf + sizeof buf, v).ptr);
}

std::string int_str(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)).to_string(); }

/// Largest i with base^i <= f.
unsigned floor_log(unsigned base, std::uint64_t f) {
  unsigned i = 0;
  unsigned __int128 power = base;
  while (power <= f) {
    ++i;
    power *= base;
  }
  return i;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

class Context {
 public:
  Context(const Family& fam, std::span<const MeasureResult> results, double c) : fam_(fam), results_(results), c_(c) {}

  const MeasureResult* find(std::string_view subject, std::string_view name, unsigned order) const {
    for (const auto& r : results_) {
      if (r.subject == subject && r.name == name && (name == "fc" || r.order == order)) return &r;
    }
    return nullptr;
  }

  /// Largest value of name(subject, i) over i = 1..top, or nullopt if one is missing.
  std::optional<std::pair<Rational, bool>> max_over_orders(std::string_view subject, std::string_view name,
                                                           unsigned top) const {
    Rational best(0);
    bool sampled = false;
    for (unsigned i = 1; i <= top; ++i) {
      const auto* r = find(subject, name, i);
      if (r == nullptr || !r->value_exact) return std::nullopt;
      best = std::max(best, r->value);
      sampled = sampled || r->mode == Mode::sampled;
    }
    return std::pair(best, sampled);
  }

  BoundReport base(std::string name, std::string subject, Strength strength, Direction direction,
                   std::optional<unsigned> ell = std::nullopt, bool with_c = false) const {
    BoundReport r;
    r.name = std::move(name);
    r.subject = std::move(subject);
    r.strength = strength;
    r.direction = direction;
    if (fam_.prime() != 0) {
      r.params.emplace_back("p", std::to_string(fam_.prime()));
      r.params.emplace_back("d", std::to_string(fam_.degree()));
    }
    r.params.emplace_back("k", std::to_string(fam_.alphabet()));
    if (ell) r.params.emplace_back("l", std::to_string(*ell));
    if (with_c) r.params.emplace_back("c", fmt(c_));
    return r;
  }

  void envelope(std::vector<BoundReport>& out, const std::string& name, const MeasureResult& m,
                double theoretical, const std::string& note) const {
    auto r = base(name, m.subject, Strength::envelope, Direction::upper, m.order, true);
    r.theoretical_value = theoretical;
    r.theoretical = fmt(theoretical);
    r.measured = m.value_string();
    r.measured_value = m.approx;
    r.satisfied = m.approx <= theoretical;
    if (theoretical > 0) r.ratio = m.approx / theoretical;
    r.note = note;
    r.mode = m.mode;
    if (m.mode == Mode::sampled) r.note += (r.note.empty() ? "" : "; ") + std::string("measured is a sampled lower bound");
    out.push_back(std::move(r));
  }

  void lower_envelope(std::vector<BoundReport>& out, const std::string& name, const MeasureResult& fc,
                      double theoretical, Strength strength, const std::string& note) const {
    auto r = base(name, fc.subject, strength, Direction::lower);
    r.theoretical_value = theoretical;
    r.theoretical = fmt(theoretical);
    r.measured = fc.value_string();
    r.measured_value = fc.approx;
    r.satisfied = fc.approx >= theoretical;
    if (theoretical > 0) r.ratio = fc.approx / theoretical;
    r.note = note;
    out.push_back(std::move(r));
  }

  void size_check(std::vector<BoundReport>& out, const std::string& name, std::uint64_t expected,
                  const std::string& note) const {
    auto r = base(name, "family", Strength::exact, Direction::equal);
    r.theoretical = int_str(expected);
    r.theoretical_value = static_cast<double>(expected);
    r.measured = int_str(fam_.size());
    r.measured_value = static_cast<double>(fam_.size());
    r.satisfied = fam_.size() == expected;
    r.ratio = r.measured_value / r.theoretical_value;
    r.note = note;
    out.push_back(std::move(r));
  }

  void distinct_check(std::vector<BoundReport>& out) const {
    auto r = base("distinct_rows", "family", Strength::exact, Direction::equal);
    const auto dup = first_duplicate_rows(fam_);
    r.theoretical = "none";
    r.measured = dup ? std::to_string(dup->first) + "," + std::to_string(dup->second) : "none";
    r.measured_value = dup ? 1.0 : 0.0;
    r.satisfied = !dup;
    r.note = "first pair of identical rows (1-based)";
    out.push_back(std::move(r));
  }

  void dual_bound(std::vector<BoundReport>& out, const std::string& name, const MeasureResult& fc,
                  const Rational& max_corr, bool sampled, DualBoundVariant variant, Strength strength,
                  const std::string& note) const {
    auto r = base(name, "family", strength, Direction::lower);
    r.params.emplace_back("variant", std::string(variant_name(variant)));
    r.params.emplace_back("max_dual_corr", max_corr.to_string());
    const std::int64_t bound = bound_fc_from_dual(fam_.size(), max_corr, fam_.alphabet(), variant);
    r.theoretical = Rational(bound).to_string();
    r.theoretical_value = static_cast<double>(bound);
    r.measured = fc.value_string();
    r.measured_value = fc.approx;
    r.satisfied = fc.value >= Rational(bound);
    if (bound > 0) r.ratio = fc.approx / static_cast<double>(bound);
    r.note = note;
    if (sampled) {
      r.mode = Mode::sampled;
      r.strength = Strength::informational;
      r.note += "; dual correlations are sampled lower bounds, so the bound is not certified";
    }
    out.push_back(std::move(r));
  }

  std::vector<BoundReport> run() const {
    const auto missing = missing_requirements();
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) {
        if (!list.empty()) list += ", ";
        list += m.measure + (m.measure == "fc" ? "" : "_" + std::to_string(m.order)) + "(" + m.subject + ")";
      }
      throw ParameterError("verify: missing required measures: " + list);
    }

    std::vector<BoundReport> out;
    const MeasureResult& fc = *find("family", "fc", 0);
    const unsigned k = fam_.alphabet();
    const std::uint64_t f = fam_.size();

    {
      auto r = base("fc_trivial_upper", "family", Strength::exact, Direction::upper);
      const auto c_value = static_cast<unsigned>(fc.value.num());
      const unsigned __int128 kc = c_value >= 64 ? ~static_cast<unsigned __int128>(0) : [&] {
        unsigned __int128 v = 1;
        for (unsigned i = 0; i < c_value && v <= f; ++i) v *= k;
        return v;
      }();
      r.theoretical = int_str(f);
      r.theoretical_value = static_cast<double>(f);
      r.measured_value = std::pow(static_cast<double>(k), c_value);
      r.measured = kc <= f ? int_str(static_cast<std::uint64_t>(kc)) : fmt(r.measured_value);
      r.satisfied = kc <= f;
      if (f > 0) r.ratio = r.measured_value / static_cast<double>(f);
      r.note = "k^C <= F";
      out.push_back(std::move(r));
    }

    if (f >= 2 && k == 2) {
      const unsigned top = floor_log(2, f);
      const auto phi = max_over_orders("dual", "phi", top);
      dual_bound(out, "fc_from_dual", fc, phi->first, phi->second, DualBoundVariant::binary, Strength::exact,
                 "C >= ceil(log2 F - log2 max_{i <= log2 F} Phi_i(dual)) - 1");
      if (const auto circ = max_over_orders("dual", "phi_circ", top); circ && circ->first > Rational(0)) {
        dual_bound(out, "fc_from_dual_circ", fc, circ->first, circ->second, DualBoundVariant::binary,
                   Strength::informational, "Phi_i replaced by the restricted Phi_i; not implied by the exact bound");
      }
    }
    if (f >= 2 && k > 2) {
      const unsigned top = floor_log(k, f);
      for (const char* name : {"gamma", "big_gamma"}) {
        const auto m = top >= 1 ? max_over_orders("dual", name, top) : std::nullopt;
        if (!m || m->first <= Rational(0)) continue;
        for (auto v : {DualBoundVariant::kary_as_stated, DualBoundVariant::kary_proof_consistent}) {
          const std::string suffix = v == DualBoundVariant::kary_as_stated ? "_as_stated" : "_proof_consistent";
          dual_bound(out, std::string("fc_from_dual_") + name + suffix, fc, m->first, m->second, v,
                     Strength::informational, "k-ary dual-family bound; logarithm bases differ between variants");
        }
      }
    }

    const std::string& tag = fam_.construction();
    const std::uint64_t p = fam_.prime();
    const unsigned d = fam_.degree();
    if (tag == "f1") {
      size_check(out, "size_f1", p - 1, "F = p - 1");
      distinct_check(out);
      for (const char* side : {"family", "dual"}) {
        for (const auto& m : results_) {
          if (m.subject == side && m.name == "phi") {
            envelope(out, "thm2_phi_upper", m, bound_phi_thm2(p, d, m.order, c_), "c * d * l * sqrt(p) * ln p");
          }
        }
        if (const auto* c_side = find(side, "fc", 0)) {
          const auto env = bound_c_thm2(p, d);
          lower_envelope(out, "thm2_fc_lower", *c_side, env.value, Strength::asymptotic,
                         env.degenerate ? "p <= d^2: bound degenerates to 0" : "(1/2) log2(p / d^2), o(1) dropped");
        }
      }
    } else if (tag == "f2") {
      size_check(out, "size_f2", poly::count_trace_zero_irreducibles(p, d),
                 "number of monic irreducibles of degree d with zero x^(d-1) coefficient");
      {
        auto r = base("size_f2_leading_term", "family", Strength::informational, Direction::equal);
        r.theoretical_value = std::pow(static_cast<double>(p), d - 1.0) / d;
        r.theoretical = fmt(r.theoretical_value);
        r.measured = int_str(f);
        r.measured_value = static_cast<double>(f);
        r.satisfied = true;
        r.ratio = r.measured_value / r.theoretical_value;
        r.note = "F = p^(d-1)/d - O(p^floor(d/2)); difference = " + fmt(r.theoretical_value - r.measured_value);
        out.push_back(std::move(r));
      }
      distinct_check(out);
      for (const auto& m : results_) {
        if (m.subject == "family" && m.name == "phi") {
          envelope(out, "thm3_phi_upper", m, bound_phi_thm2(p, d, m.order, c_), "c * l * d * sqrt(p) * ln p");
        }
      }
      lower_envelope(out, "thm3_fc_lower", fc, bound_c_thm3(p, d), Strength::asymptotic,
                     "(1/2) log2(p^d / d^2), o(1) dropped");
    } else if (tag == "ksym") {
      size_check(out, "size_ksym", (ipow(p, d) - p) / (static_cast<std::uint64_t>(d) * p), "F = (p^d - p)/(d p)");
      distinct_check(out);
      for (const auto& m : results_) {
        if (m.subject == "family" && m.name == "gamma") {
          envelope(out, "thm5_gamma_upper", m, bound_gamma_thm5(p, m.order, c_), "c * l * sqrt(p) * ln p");
        }
        if (m.subject == "dual" && m.name == "gamma_circ") {
          envelope(out, "thm5_gamma_circ_upper", m, bound_gamma_circ_thm5(p, d, m.order, c_),
                   "c * ((l p - 1) p^(d/2) + p) / (d p)");
        }
      }
      const auto env = bound_c_thm5(p, d);
      lower_envelope(out, "thm5_fc_lower", fc, env.value, Strength::informational,
                     "(d/2 - 1) log2 p - log2((d - 1) log2 p); clamped " + fmt(env.clamped));
    }
    return out;
  }

  std::vector<Requirement> missing_requirements() const {
    std::vector<Requirement> missing;
    for (const auto& req : required_measures(fam_)) {
      const auto* r = find(req.subject, req.measure, req.order);
      if (r == nullptr || !r->value_exact) missing.push_back(req);
    }
    return missing;
  }

 private:
  const Family& fam_;
  std::span<const MeasureResult> results_;
  double c_;
};

}  // namespace

std::vector<Requirement> required_measures(const Family& fam) {
  std::vector<Requirement> out{{"family", "fc", 0}};
  if (fam.alphabet() == 2 && fam.size() >= 2) {
    const unsigned top = floor_log(2, fam.size());
    for (unsigned i = 1; i <= top; ++i) out.push_back({"dual", "phi", i});
  }
  return out;
}

std::vector<BoundReport> verify_family(const Family& fam, std::span<const measures::MeasureResult> results,
                                       double c) {
  if (!(c > 0)) throw ParameterError("verify: constant c must be > 0");
  return Context(fam, results, c).run();
}

}  // namespace seqfam::bounds
