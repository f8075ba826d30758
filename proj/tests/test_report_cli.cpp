#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "seqfam/errors.hpp"
#include "seqfam/kernels.hpp"
#include "seqfam/report.hpp"

using namespace seqfam;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "seqfam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("seqfam-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("JSON report round trip") {
  const auto fam = family_k_symbol(13, 2, 3);
  report::Report r;
  r.measures.push_back(measures::gamma(fam, 2));
  r.measures.push_back(measures::f_complexity(fam));
  r.measures.push_back(measures::big_gamma(fam, 1));
  const std::string text = report::render(r, report::Format::json);
  const auto doc = nlohmann::json::parse(text);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 3);
  CHECK(doc[0]["value"] == "40/9");
  CHECK(doc[0]["mode"] == "exact");
  CHECK(doc[0]["witness"]["type"] == "correlation");

  const auto back = report::read_measures(text);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back[i].name == r.measures[i].name);
    CHECK(back[i].value == r.measures[i].value);
    CHECK(back[i].approx == r.measures[i].approx);
    CHECK(back[i].witness == r.measures[i].witness);
    CHECK(measures::witness_reproduces(fam, back[i]));
  }
}

TEST_CASE("report formats") {
  report::Report empty;
  CHECK_THROWS_AS(report::render(empty, report::Format::json), ParameterError);

  report::Report one;
  one.measures.push_back(measures::cross_correlation(family_f2(7, 2), 1));
  const auto doc = nlohmann::json::parse(report::render(one, report::Format::json));
  CHECK(doc.size() == 1);

  const std::string csv = report::render(one, report::Format::csv);
  CHECK(csv.rfind("record,name,subject,order,mode,value,theoretical,satisfied,strength,detail\n", 0) == 0);
  CHECK(csv.find("measure,phi,family,1,exact,") != std::string::npos);
  CHECK(report::render(one, report::Format::text).find("phi_1(family) = ") != std::string::npos);
  CHECK_THROWS_AS(report::parse_format("xml"), ParameterError);
  CHECK_THROWS_AS(report::read_measures("{}"), ParameterError);
  CHECK_THROWS_AS(report::read_measures("[{\"record\": \"measure\"}]"), ParameterError);
}

TEST_CASE("cli gen, dual and measure") {
  const auto dir = scratch();
  const auto fam_path = (dir / "f72.txt").string();
  auto r = run({"gen", "--construction", "f2", "--p", "7", "--d", "2", "--out", fam_path});
  REQUIRE(r.code == cli::kOk);
  const auto fam = read_family_file(fam_path);
  CHECK(fam.size() == 3);
  CHECK(fam.length() == 6);

  r = run({"measure", "--in", fam_path, "--measure", "phi", "--ell", "2", "--mode", "exact"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["value"] == "4/1");
  CHECK(doc[0]["witness"]["I"].size() == 2);

  r = run({"measure", "--in", fam_path, "--measure", "phi", "--ell", "1", "--subject", "dual"});
  CHECK(nlohmann::json::parse(r.out)[0]["value"] == "2/1");

  const auto dual_path = (dir / "dual.txt").string();
  CHECK(run({"dual", "--in", fam_path, "--out", dual_path}).code == cli::kOk);
  CHECK(read_family_file(dual_path) == dual(fam));

  r = run({"gen", "--construction", "ksym", "--p", "13", "--d", "2", "--k", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("#PRSFAM v1 p=13 d=2 k=3 N=12 F=6 construction=ksym\n", 0) == 0);
  r = run({"gen", "--construction", "f1", "--p", "11", "--d", "5", "--base", "x^5+x^3+x^2+4"});
  CHECK(r.code == cli::kOk);
}

TEST_CASE("cli verify") {
  const auto dir = scratch();
  const auto path = (dir / "f53.txt").string();
  REQUIRE(run({"gen", "--construction", "f2", "--p", "5", "--d", "3", "--out", path}).code == cli::kOk);
  auto r = run({"verify", "--in", path, "--c", "10"});
  CHECK(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  bool saw_dual_bound = false;
  for (const auto& rec : doc) {
    if (rec["record"] == "bound" && rec["strength"] == "exact") CHECK(rec["satisfied"] == true);
    saw_dual_bound = saw_dual_bound || rec["name"] == "fc_from_dual";
  }
  CHECK(saw_dual_bound);

  // Same report with 1 and 8 threads.
  const auto one = run({"verify", "--in", path, "--threads", "1"});
  const auto eight = run({"verify", "--in", path, "--threads", "8"});
  CHECK(one.out == eight.out);

  // Scalar and AVX2 kernels give the same report.
  if (kernels::isa_supported(kernels::Isa::avx2)) {
    const auto scalar = run({"--isa", "scalar", "verify", "--in", path});
    const auto avx2 = run({"--isa", "avx2", "verify", "--in", path});
    CHECK(scalar.out == avx2.out);
    CHECK(scalar.out == one.out);
  }

  // Precomputed measures are reused; a forged C violates k^C <= F.
  const auto results = (dir / "forged.json").string();
  {
    auto forged = nlohmann::ordered_json::parse(one.out);
    for (auto& rec : forged) {
      if (rec["record"] == "measure" && rec["name"] == "fc") {
        rec["value"] = "4/1";
        rec["witness"] = nullptr;
      }
    }
    std::ofstream(results) << forged.dump();
  }
  r = run({"verify", "--in", path, "--results", results});
  CHECK(r.code == cli::kViolation);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == cli::kParameterError);
  CHECK(run({"gen", "--bogus"}).code == cli::kParameterError);
  CHECK(run({"gen", "--construction", "f2", "--p", "9", "--d", "2"}).code == cli::kParameterError);
  CHECK(run({"gen", "--construction", "f2", "--p", "7", "--d", "3"}).code == cli::kViolation);
  auto dup = run({"gen", "--construction", "f2", "--p", "7", "--d", "3", "--allow-duplicates"});
  CHECK(dup.code == cli::kOk);
  CHECK(dup.err.find("identical") != std::string::npos);
  CHECK(run({"gen", "--construction", "ksym", "--p", "7", "--d", "3", "--k", "3"}).code == cli::kParameterError);

  const auto dir = scratch();
  const auto path = (dir / "f113.txt").string();
  REQUIRE(run({"gen", "--construction", "f1", "--p", "13", "--d", "5", "--out", path}).code == cli::kOk);
  CHECK(run({"measure", "--in", path, "--measure", "phi", "--ell", "3", "--budget", "100"}).code ==
        cli::kBudgetError);
  CHECK(run({"measure", "--in", path, "--measure", "gamma", "--ell", "1", "--format", "xml"}).code ==
        cli::kParameterError);
  CHECK(run({"measure", "--in", (dir / "missing.txt").string(), "--measure", "fc"}).code == cli::kFailure);

  {
    std::ofstream bad(dir / "bad.txt");
    bad << "#PRSFAM v1 p=7 d=2 k=2 N=2 F=1 construction=f2\n0 2\n";
  }
  const auto parse = run({"measure", "--in", (dir / "bad.txt").string(), "--measure", "fc"});
  CHECK(parse.code == cli::kParameterError);
  CHECK(parse.err.find("line 2") != std::string::npos);

  auto w = run({"weil", "--poly", "x^2+1", "--p", "5"});
  CHECK(w.code == cli::kOk);
  CHECK(nlohmann::json::parse(w.out)[0]["measured"] == "1/1");
  CHECK(run({"weil", "--poly", "x^2+2x+1", "--p", "5"}).code == cli::kParameterError);
  CHECK(run({"--isa", "scalar", "weil", "--poly", "x^3+x+1", "--p", "7"}).code == cli::kOk);
  CHECK(run({"--help"}).code == cli::kOk);
}
