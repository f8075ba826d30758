#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seqfam/bounds.hpp"
#include "seqfam/errors.hpp"
#include "seqfam/family.hpp"
#include "seqfam/kernels.hpp"
#include "seqfam/measures.hpp"
#include "seqfam/report.hpp"

namespace seqfam::cli {

namespace {

struct EvalFlags {
  std::string mode = "exact";
  std::uint64_t samples = 4096;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget = measures::kDefaultBudget;

  void attach(CLI::App* app) {
    app->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    app->add_option("--samples", samples, "number of sampled (I, D) tuples")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "sampling seed");
    app->add_option("--threads", threads, "worker threads (0 = all cores)");
    app->add_option("--budget", budget, "work budget in loop units")->check(CLI::PositiveNumber);
  }

  measures::EvalOptions options() const {
    measures::EvalOptions o;
    o.mode = mode == "sampled" ? measures::Mode::sampled : measures::Mode::exact;
    o.samples = samples;
    o.seed = seed;
    o.threads = threads;
    o.budget = budget;
    return o;
  }
};

struct OutputFlags {
  std::string format = "json";
  std::string path;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--out", path, "output file (default stdout)");
  }

  void write(const report::Report& r, std::ostream& out) const {
    const std::string text = report::render(r, report::parse_format(format));
    write_text(text, out);
  }

  void write_text(const std::string& text, std::ostream& out) const {
    if (path.empty() || path == "-") {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text;
    if (!file) throw std::runtime_error("write failed for '" + path + "'");
  }
};

Family load(const std::string& path) {
  if (path == "-") return read_family(std::cin);
  return read_family_file(path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

measures::MeasureResult run_measure(const Family& fam, const std::string& subject, const std::string& name,
                                    unsigned ell, const measures::EvalOptions& options) {
  auto r = measures::compute(fam, name, ell, options);
  r.subject = subject;
  return r;
}

bool has(const std::vector<measures::MeasureResult>& results, const std::string& subject, const std::string& name,
         unsigned ell) {
  for (const auto& r : results) {
    if (r.subject == subject && r.name == name && (name == "fc" || r.order == ell)) return true;
  }
  return false;
}

unsigned floor_log(unsigned base, std::size_t f) {
  unsigned i = 0;
  for (std::size_t power = base; power <= f; power *= base) ++i;
  return i;
}

/// Measures verify computes: the required ones plus the envelope measures at
/// order `ell` for the construction (ell = 0 skips those).
std::vector<measures::MeasureResult> verify_measures(const Family& fam, unsigned ell,
                                                     const measures::EvalOptions& options,
                                                     std::vector<measures::MeasureResult> given) {
  std::vector<std::pair<std::string, std::pair<std::string, unsigned>>> wanted;
  for (const auto& req : bounds::required_measures(fam)) wanted.push_back({req.subject, {req.measure, req.order}});
  const std::string& tag = fam.construction();
  if (ell > 0) {
    if (tag == "f1") {
      wanted.push_back({"family", {"phi", ell}});
      wanted.push_back({"dual", {"phi", ell}});
    } else if (tag == "f2") {
      wanted.push_back({"family", {"phi", ell}});
    } else if (tag == "ksym") {
      wanted.push_back({"family", {"gamma", ell}});
      wanted.push_back({"dual", {"gamma_circ", ell}});
    }
  }
  if (fam.alphabet() > 2 && fam.size() >= 2) {
    for (unsigned i = 1; i <= floor_log(fam.alphabet(), fam.size()); ++i) wanted.push_back({"dual", {"gamma", i}});
  }

  std::optional<Family> dual_fam;
  for (const auto& [subject, what] : wanted) {
    const auto& [name, order] = what;
    if (has(given, subject, name, order)) continue;
    if (subject == "dual" && !dual_fam) dual_fam = dual(fam);
    given.push_back(run_measure(subject == "dual" ? *dual_fam : fam, subject, name, order, options));
  }
  return given;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Families of pseudorandom sequences over finite fields: construction, measures, bounds", "seqfam"};
  app.require_subcommand(1);
  std::string isa = "auto";
  app.add_option("--isa", isa, "kernel variant: auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // gen
  auto* gen = app.add_subcommand("gen", "construct a family and write it as a family file");
  std::string construction;
  std::uint64_t p = 0;
  unsigned d = 0;
  unsigned k = 2;
  std::string base_text;
  bool allow_duplicates = false;
  bool skip_coprime = false;
  std::uint64_t enum_budget = poly::EnumerationBudget{}.max_candidates;
  OutputFlags gen_out;
  gen->add_option("--construction", construction, "f1, f2 or ksym")
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "ksym"}));
  gen->add_option("--p", p, "odd prime")->required();
  gen->add_option("--d", d, "degree")->required();
  gen->add_option("--k", k, "alphabet size (ksym)");
  gen->add_option("--base", base_text, "base polynomial for f1, e.g. \"x^5+x^3+x^2+4\"");
  gen->add_flag("--allow-duplicates", allow_duplicates, "write the family even if two rows coincide");
  gen->add_flag("--no-coprime-check", skip_coprime, "ksym: skip gcd(k, (p^d-1)/(p-1)) = 1");
  gen->add_option("--enum-budget", enum_budget, "maximum candidates enumerated")->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out.path, "family file (default stdout)");

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "transpose a family file");
  std::string dual_in;
  OutputFlags dual_out;
  dual_cmd->add_option("--in", dual_in, "family file ('-' for stdin)")->required();
  dual_cmd->add_option("--out", dual_out.path, "family file (default stdout)");

  // measure
  auto* measure = app.add_subcommand("measure", "evaluate one measure of a family");
  std::string measure_in;
  std::string measure_name;
  std::string subject = "family";
  unsigned measure_ell = 1;
  EvalFlags measure_eval;
  OutputFlags measure_out;
  measure->add_option("--in", measure_in, "family file ('-' for stdin)")->required();
  measure->add_option("--measure", measure_name, "fc, phi, phi_circ, gamma, gamma_circ or big_gamma")
      ->required()
      ->check(CLI::IsMember({"fc", "phi", "phi_circ", "gamma", "gamma_circ", "big_gamma"}));
  measure->add_option("--ell", measure_ell, "order l")->check(CLI::PositiveNumber);
  measure->add_option("--subject", subject, "family or dual")->check(CLI::IsMember({"family", "dual"}));
  measure_eval.attach(measure);
  measure_out.attach(measure);

  // verify
  auto* verify = app.add_subcommand("verify", "compare measured values with the theoretical bounds");
  std::string verify_in;
  std::string results_path;
  double c = bounds::kDefaultConstant;
  unsigned verify_ell = 2;
  EvalFlags verify_eval;
  OutputFlags verify_out;
  verify->add_option("--in", verify_in, "family file ('-' for stdin)")->required();
  verify->add_option("--results", results_path, "JSON report with precomputed measures");
  verify->add_option("--c", c, "constant of the upper-bound envelopes")->check(CLI::PositiveNumber);
  verify->add_option("--ell", verify_ell, "order of the envelope measures (0 = skip)");
  verify_eval.attach(verify);
  verify_out.attach(verify);

  // weil
  auto* weil = app.add_subcommand("weil", "check the Weil bound for one polynomial");
  std::string h_text;
  std::uint64_t weil_p = 0;
  OutputFlags weil_out;
  weil->add_option("--poly", h_text, "square-free polynomial, e.g. \"x^2+1\"")->required();
  weil->add_option("--p", weil_p, "odd prime")->required();
  weil_out.attach(weil);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kParameterError;
  }

  try {
    if (isa != "auto") kernels::set_isa(isa == "avx2" ? kernels::Isa::avx2 : kernels::Isa::scalar);

    if (gen->parsed()) {
      BuildOptions options;
      options.budget.max_candidates = enum_budget;
      options.require_distinct_rows = !allow_duplicates;
      options.require_coprime_order = !skip_coprime;
      std::optional<poly::Polynomial> base;
      if (!base_text.empty()) base = poly::parse_polynomial(base_text, p);
      Family fam = construction == "f1"   ? family_f1(p, d, base, options)
                   : construction == "f2" ? family_f2(p, d, options)
                                          : family_k_symbol(p, d, k, options);
      std::ostringstream text;
      write_family(fam, text);
      gen_out.write_text(text.str(), out);
      if (const auto dup = first_duplicate_rows(fam)) {
        err << "warning: rows " << dup->first << " and " << dup->second << " are identical\n";
      }
    } else if (dual_cmd->parsed()) {
      std::ostringstream text;
      write_family(dual(load(dual_in)), text);
      dual_out.write_text(text.str(), out);
    } else if (measure->parsed()) {
      const Family fam = load(measure_in);
      const Family target = subject == "dual" ? dual(fam) : fam;
      report::Report r;
      r.family = report::FamilyInfo::of(target);
      r.measures.push_back(run_measure(target, subject, measure_name, measure_ell, measure_eval.options()));
      measure_out.write(r, out);
    } else if (verify->parsed()) {
      const Family fam = load(verify_in);
      std::vector<measures::MeasureResult> given;
      if (!results_path.empty()) given = report::read_measures(slurp(results_path));
      report::Report r;
      r.family = report::FamilyInfo::of(fam);
      r.measures = verify_measures(fam, verify_ell, verify_eval.options(), std::move(given));
      r.bounds = bounds::verify_family(fam, r.measures, c);
      verify_out.write(r, out);
      if (!bounds::all_exact_satisfied(r.bounds)) {
        err << "verify: an exact inequality is violated\n";
        return kViolation;
      }
    } else if (weil->parsed()) {
      report::Report r;
      r.bounds.push_back(bounds::weil_check(poly::parse_polynomial(h_text, weil_p)));
      weil_out.write(r, out);
      if (!r.bounds.back().satisfied) return kViolation;
    }
    return kOk;
  } catch (const DuplicateRowsError& e) {
    err << "error: " << e.what() << " (use --allow-duplicates to write the family anyway)\n";
    return kViolation;
  } catch (const BudgetError& e) {
    err << "error: " << e.what();
    if (e.lower_bound()) err << "; verified lower bound " << *e.lower_bound();
    err << '\n';
    return kBudgetError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace seqfam::cli
