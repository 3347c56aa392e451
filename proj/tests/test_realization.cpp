#include <doctest.h>

#include "chamberscope/enumeration.hpp"
#include "chamberscope/golden.hpp"
#include "chamberscope/realization.hpp"
#include "helpers.hpp"

using namespace chamberscope;
using test::vec;

namespace {

ChamberRecord realized(const char* code, int m) { return realize(parse_code(code, m)); }

std::string minus_name(const char* code, int m) { return format_code(minus_map(parse_code(code, m)).code); }

}  // namespace

TEST_CASE("a_min examples") {
  CHECK(*realized("<5>", 5).a_min == vec({1, 1, 1, 1, 3}));
  const auto r63 = realized("<63>", 6);
  CHECK(*r63.a_min == vec({1, 1, 1, 2, 2, 4}));
  CHECK(*r63.l1 == Rational(11));
  CHECK(r63.l1_odd == true);
  CHECK(*realized("<521>", 5).a_min == vec({0, 0, 1, 1, 1}));
  CHECK(*realized("<41>", 4).a_min == vec({0, 1, 1, 1}));
  const auto infeasible = realized("<9642>", 9);
  CHECK_FALSE(infeasible.realizable);
  CHECK_FALSE(infeasible.a_min.has_value());
}

TEST_CASE("golden a_min tables") {
  for (const auto& [m, rows] : golden::kAMin) {
    for (const auto& row : rows) {
      const auto r = realize(parse_code(row.code, m));
      REQUIRE(r.realizable);
      Vec<Rational> expected(m);
      for (int i = 0; i < m; ++i) expected(i) = Rational(row.a_min[static_cast<std::size_t>(i)]);
      CHECK_MESSAGE(*r.a_min == expected, row.code);
    }
  }
  for (const auto& row : golden::kHexagon) {
    const auto r = realize(parse_code(row.code, 6));
    CHECK_MESSAGE(*r.l1 == Rational(row.l1), row.code);
  }
}

TEST_CASE("the printed (1,2,2,2) lies in <41> but is not minimal") {
  const auto family = short_family_of_point(vec({1, 2, 2, 2}));
  REQUIRE(family.has_value());
  CHECK(*family == short_family_of(parse_code("<41>", 4)));
}

TEST_CASE("points on walls have no chamber") {
  CHECK_FALSE(short_family_of_point(vec({1, 1, 2})).has_value());
  CHECK(short_family_of_point(vec({1, 1, 1})).has_value());
}

TEST_CASE("min_x1 examples") {
  CHECK(min_first_coord(parse_code("<41>", 4)) == Rational(0));
  CHECK(min_first_coord(parse_code("<764>", 7)) > Rational(1));
  for (int m = 4; m <= 9; ++m) {
    const std::string code = "<" + std::to_string(m) + ">";
    CHECK_MESSAGE(min_first_coord(parse_code(code, m)) == Rational(1), code);
    Vec<Rational> expected = Vec<Rational>::Constant(m, Rational(1));
    expected(m - 1) = Rational(m - 2);
    CHECK(*realize(parse_code(code, m)).a_min == expected);
  }
  CHECK_THROWS_AS(min_first_coord(parse_code("<9642>", 9)), NotRealizable);
}

TEST_CASE("plus and minus maps") {
  CHECK(format_code(plus_map(parse_code("<3>", 3))) == "<41>");
  CHECK(format_code(plus_map(parse_code("<3=>", 3))) == "<4>");
  CHECK(format_code(plus_map(parse_code("<41=>", 4))) == "<52>");
  CHECK(format_code(plus_map(plus_map(parse_code("<3>", 3)))) == "<521>");
  CHECK(minus_name("<53>", 5) == "<42=>");
  CHECK(minus_name("<521>", 5) == "<41>");
  CHECK(minus_map(parse_code("<521>", 5)).is_chamber);
  CHECK(minus_name("<4>", 4) == "<3=>");
  CHECK_FALSE(minus_map(parse_code("<4>", 4)).is_chamber);
  CHECK_THROWS_AS(minus_map(parse_code("<764>", 7)), NotInPlusImage);
  CHECK_THROWS_AS(minus_map(parse_code("<3>", 3)), InvalidCode);
}

TEST_CASE("in-image and toric tests on small chambers") {
  for (int m = 3; m <= 6; ++m) {
    for (const auto& r : enumerate_chambers(m)) {
      CHECK(r.toric);
      if (m >= 4) CHECK_MESSAGE(r.in_plus_image, format_code(r.code));
    }
  }
  const auto r765 = analyze_chamber(parse_code("<765>", 7));
  CHECK(r765.in_plus_image);
  CHECK_FALSE(r765.toric);
  CHECK_FALSE(toric_criterion(parse_code("<764>", 7)));
  CHECK_FALSE(toric_criterion(parse_code("<754,763>", 7)));
  CHECK(toric_criterion(parse_code("<754,762>", 7)));
}

TEST_CASE("toric witnesses stay in their chamber") {
  const auto test = toric_test(parse_code("<8651,872>", 8));
  REQUIRE(test.holds);
  const Vec<Rational>& w = *test.witness;
  CHECK(w(0) >= Rational(1));
  CHECK(w(7) >= w(0) + w(1) + w(2));
  CHECK(*short_family_of_point(w) == short_family_of(parse_code("<8651,872>", 8)));
}

TEST_CASE("a_min reproduces the chamber for every code m <= 7") {
  for (int m = 3; m <= 7; ++m) {
    for (const auto& r : enumerate_chambers(m)) {
      REQUIRE(r.realizable);
      CHECK(*short_family_of_point(*r.a_min) == short_family_of(r.code));
    }
  }
}

TEST_CASE("reduced P1 has at most m + |S| rows") {
  for (const auto& code : enumerate_codes(6).codes) {
    const auto family = short_family_of(code);
    CHECK(build_p1(family).constraints().size() <= 6 + family.size());
    CHECK(build_p1(family, P1Rows::kFull).constraints().size() == 6 + family.size());
  }
}

TEST_CASE("strata counts through the chambers of the next dimension") {
  CHECK(count_strata(3) == 3);
  CHECK(count_strata(4) == 7);
  CHECK(count_strata(5) == 21);
  CHECK(count_strata(6) == 118);
}

TEST_CASE("chamber analysis does not depend on the worker count") {
  ChamberOptions threaded;
  threaded.jobs = 3;
  const auto a = enumerate_chambers(7);
  const auto b = enumerate_chambers(7, threaded);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].code == b[i].code);
    CHECK(*a[i].a_min == *b[i].a_min);
    CHECK(a[i].toric == b[i].toric);
  }
}
