#include <doctest.h>

#include <random>
#include <sstream>

#include "seqfam/errors.hpp"
#include "seqfam/family.hpp"
#include "seqfam/prime_field.hpp"

using namespace seqfam;
using Rows = std::vector<std::vector<Symbol>>;

namespace {

Rows rows_of(const Family& fam) {
  Rows out;
  for (std::size_t r = 0; r < fam.size(); ++r) out.emplace_back(fam.row(r).begin(), fam.row(r).end());
  return out;
}

BuildOptions lenient() {
  BuildOptions o;
  o.require_distinct_rows = false;
  return o;
}

std::string serialize(const Family& fam) {
  std::ostringstream s;
  write_family(fam, s);
  return s.str();
}

Family parse(const std::string& text) {
  std::istringstream s(text);
  return read_family(s);
}

}  // namespace

TEST_CASE("f2 families match the brute-force oracle") {
  CHECK(rows_of(family_f2(3, 2)) == Rows{{1, 1}});
  CHECK(rows_of(family_f2(5, 2)) == Rows{{1, 0, 0, 1}, {0, 1, 1, 0}});
  CHECK(rows_of(family_f2(7, 2)) == Rows{{0, 1, 1, 1, 1, 0}, {1, 1, 0, 0, 1, 1}, {1, 0, 1, 1, 0, 1}});
  CHECK(rows_of(family_f2(5, 3)) == Rows{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 0},
                                         {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}});
  CHECK(rows_of(family_f2(11, 2)) == Rows{{1, 0, 1, 1, 0, 0, 1, 1, 0, 1},
                                          {0, 1, 0, 1, 1, 1, 1, 0, 1, 0},
                                          {0, 1, 1, 0, 1, 1, 0, 1, 1, 0},
                                          {1, 0, 0, 1, 1, 1, 1, 0, 0, 1},
                                          {1, 1, 1, 0, 0, 0, 0, 1, 1, 1}});
  const auto f13 = family_f2(13, 2);
  CHECK(f13.size() == 6);
  CHECK(rows_of(f13)[0] == std::vector<Symbol>{0, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0});
  CHECK(f13.construction() == "f2");
  CHECK(f13.length() == 12);
}

TEST_CASE("f2 over (7, 3) has coinciding rows") {
  CHECK_THROWS_AS(family_f2(7, 3), DuplicateRowsError);
  const auto fam = family_f2(7, 3, lenient());
  CHECK(fam.size() == 16);
  const auto dup = first_duplicate_rows(fam);
  REQUIRE(dup.has_value());
  CHECK(dup->first == 1);
  CHECK(dup->second == 4);
}

TEST_CASE("f1 families") {
  const auto fam = family_f1(11, 5);
  CHECK(fam.size() == 10);
  CHECK(fam.length() == 10);
  CHECK(fam.construction() == "f1");
  CHECK_FALSE(first_duplicate_rows(fam).has_value());
  const Rows expected{{1, 0, 1, 1, 0, 1, 1, 1, 0, 0}, {0, 0, 0, 1, 0, 0, 1, 0, 1, 1}, {1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
                      {1, 1, 0, 1, 1, 1, 0, 0, 0, 1}, {0, 1, 0, 1, 1, 0, 1, 1, 1, 0}, {1, 0, 0, 0, 1, 0, 0, 1, 0, 1},
                      {0, 1, 1, 1, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
                      {1, 1, 0, 0, 0, 1, 0, 0, 1, 0}};
  CHECK(rows_of(fam) == expected);

  // Row 1 is the Legendre sequence of the base itself.
  const auto base = poly::find_f1_base(11, 5);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(fam.at(0, n - 1) == (ff::legendre(base(n), 11) == 1 ? 0 : 1));

  const auto f13 = family_f1(13, 5);
  CHECK(f13.size() == 12);
  CHECK(rows_of(f13)[2] == std::vector<Symbol>{0, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 1});
}

TEST_CASE("f1 preconditions") {
  CHECK_THROWS_AS(family_f1(11, 4), ParameterError);
  CHECK_THROWS_AS(family_f1(5, 5), ParameterError);  // p | d
  CHECK_THROWS_AS(family_f1(11, 5, poly::Polynomial(11, {4, 1, 1, 1, 0, 1})), ParameterError);  // not irreducible
  CHECK_THROWS_AS(family_f1(11, 5, poly::Polynomial(11, {4, 0, 1, 1, 1, 1})), ParameterError);  // x^4 term
  CHECK_THROWS_AS(family_f1(11, 5, poly::Polynomial(11, {4, 0, 1, 0, 0, 1})), ParameterError);  // a_2 = 0
  CHECK_NOTHROW(family_f1(11, 5, poly::Polynomial(11, {4, 0, 1, 1, 0, 1})));
}

TEST_CASE("k-symbol families") {
  const auto fam = family_k_symbol(13, 2, 3);
  CHECK(fam.size() == 6);
  CHECK(fam.alphabet() == 3);
  CHECK(rows_of(fam) == Rows{{1, 2, 1, 0, 0, 0, 0, 0, 0, 1, 2, 1},
                             {2, 2, 0, 0, 2, 1, 1, 2, 0, 0, 2, 2},
                             {2, 1, 1, 2, 0, 1, 1, 0, 2, 1, 1, 2},
                             {0, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 0},
                             {2, 0, 2, 1, 2, 0, 0, 2, 1, 2, 0, 2},
                             {0, 1, 2, 0, 1, 0, 0, 1, 0, 2, 1, 0}});
  CHECK(rows_of(family_k_symbol(7, 2, 3)) == Rows{{2, 2, 1, 1, 2, 2}, {1, 0, 1, 1, 0, 1}, {2, 0, 0, 0, 0, 2}});
  CHECK(family_k_symbol(5, 3, 4).size() == 8);
  CHECK(family_k_symbol(11, 2, 5).size() == 5);

  CHECK_THROWS_AS(family_k_symbol(7, 3, 3), ParameterError);   // gcd(3, 57) = 3
  CHECK_THROWS_AS(family_k_symbol(13, 3, 3), ParameterError);  // gcd(3, 183) = 3
  CHECK_THROWS_AS(family_k_symbol(13, 4, 3), ParameterError);  // d not prime
  CHECK_THROWS_AS(family_k_symbol(13, 2, 5), ParameterError);  // 5 does not divide 12
  CHECK_THROWS_AS(family_k_symbol(13, 2, 2), ParameterError);  // gcd(2, 14) = 2
  BuildOptions loose;
  loose.require_coprime_order = false;
  CHECK(family_k_symbol(13, 2, 2, loose).size() == 6);
}

TEST_CASE("k = 2 symbol family equals f2") {
  CHECK(family_k_symbol(5, 3, 2).same_sequences(family_f2(5, 3)));
  BuildOptions loose;
  loose.require_coprime_order = false;
  CHECK(family_k_symbol(13, 2, 2, loose).same_sequences(family_f2(13, 2)));
  CHECK(family_k_symbol(7, 3, 2, lenient()).same_sequences(family_f2(7, 3, lenient())));
}

TEST_CASE("no zero symbols: every value is a unit") {
  for (const auto& fam : {family_f2(11, 2), family_f1(11, 5), family_k_symbol(13, 2, 3)}) {
    for (auto s : fam.symbols()) CHECK(s < fam.alphabet());
  }
}

TEST_CASE("dual is an involution") {
  const auto f = family_f2(3, 2);
  const auto d = dual(f);
  CHECK(d.size() == 2);
  CHECK(d.length() == 1);
  CHECK(rows_of(d) == Rows{{1}, {1}});
  CHECK(d.construction() == "dual(f2)");
  CHECK(dual(d) == f);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t len = 1 + rng() % 9;
    const unsigned k = 2 + rng() % 4;
    std::vector<Symbol> sym(rows * len);
    for (auto& s : sym) s = static_cast<Symbol>(rng() % k);
    const Family fam({0, 0, k, "external"}, rows, len, sym);
    const auto dd = dual(fam);
    CHECK(dd.size() == len);
    CHECK(dual(dd) == fam);
    auto a = fam.symbols();
    auto b = dd.symbols();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(Family({0, 0, 2, "external"}, 1, 2, {0, 2}), ParameterError);
  CHECK_THROWS_AS(Family({0, 0, 2, "external"}, 2, 2, {0, 1, 1}), ParameterError);
  CHECK_THROWS_AS(Family({0, 0, 2, "external"}, Rows{{0, 1}, {1}}), ParameterError);
  CHECK_THROWS_AS(Family({0, 0, 2, "external"}, 0, 2, {}), ParameterError);
}

TEST_CASE("family files") {
  const auto fam = family_f2(7, 2);
  const std::string text = serialize(fam);
  CHECK(text ==
        "#PRSFAM v1 p=7 d=2 k=2 N=6 F=3 construction=f2\n"
        "0 1 1 1 1 0\n"
        "1 1 0 0 1 1\n"
        "1 0 1 1 0 1\n");
  CHECK(parse(text) == fam);
  CHECK(parse(serialize(dual(fam))) == dual(fam));

  auto line_of = [](const std::string& bad) {
    try {
      parse(bad);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  const std::string header = "#PRSFAM v1 p=7 d=2 k=2 N=2 F=2 construction=f2\n";
  CHECK(line_of(header + "0 1\n1 2\n") == 3);                // symbol k on alphabet k
  CHECK(line_of(header + "0 1\n") == 2);                     // F mismatch
  CHECK(line_of(header + "0 1\n1 0\n1 1\n") == 4);           // extra row
  CHECK(line_of(header + "0 1\n1\n") == 3);                  // ragged
  CHECK(line_of(header + "0 1\r\n1 0\n") == 2);              // CR
  CHECK(line_of("#PRSFAM v2 p=7 d=2 k=2 N=2 F=2 construction=f2\n0 1\n1 0\n") == 1);
  CHECK(line_of("#PRSFAM v1 p=7 d=2 k=2 N=2 F=2 construction=f9\n0 1\n1 0\n") == 1);
  CHECK(line_of("#PRSFAM v1 d=2 p=7 k=2 N=2 F=2 construction=f2\n0 1\n1 0\n") == 1);
  CHECK(line_of("") == 1);
  CHECK(parse("#PRSFAM v1 p=0 d=0 k=3 N=2 F=1 construction=dual(dual(ksym))\n0 2\n").alphabet() == 3);
}
