#include <doctest.h>

#include "chamberscope/enumeration.hpp"
#include "chamberscope/golden.hpp"
#include "chamberscope/invariants.hpp"
#include "chamberscope/realization.hpp"
#include "chamberscope/ring_oracle.hpp"
#include "helpers.hpp"

using namespace chamberscope;
using test::family_of;

TEST_CASE("Poincare polynomials") {
  CHECK(poincare_direct(family_of("<54>", 5)) == Polynomial{1, 0, 5, 0, 1});
  CHECK(poincare_direct(family_of("<>", 5)).empty());
  for (int m = 4; m <= 9; ++m) {
    Polynomial expected;
    for (int i = 0; i <= m - 3; ++i) {
      expected.push_back(1);
      if (i < m - 3) expected.push_back(0);
    }
    CHECK(poincare_direct(family_of(("<" + std::to_string(m) + ">").c_str(), m)) == expected);
  }
}

TEST_CASE("Betti recurrence") {
  CHECK(betti_recurrence(family_of("<54>", 5)) == std::vector<long>{1, 5, 1});
  CHECK(betti_recurrence(family_of("<6>", 6)) == std::vector<long>{1, 1, 1, 1});
  for (const auto& [code, betti] : golden::kPentagonBetti) {
    CHECK_MESSAGE(betti_recurrence(family_of(code.c_str(), 5)) == betti, code);
  }
}

TEST_CASE("r_cup and s") {
  CHECK(r_cup(family_of("<52>", 5)) == 1);
  CHECK(r_cup(family_of("<521>", 5)) == 0);
  CHECK(r_cup(family_of("<6321>", 6)) == 0);
  CHECK(r_cup(family_of("<63>", 6)) == 4);
  CHECK(s_alpha(family_of("<65>", 6)) == 6);
  CHECK(s_alpha(family_of("<64>", 6)) == 5);
  CHECK(s_alpha(family_of("<63>", 6)) == 4);
  CHECK(s_alpha(family_of("<6321>", 6)) == 0);
  CHECK(s_alpha(family_of("<621>", 6)) == 0);
  CHECK(s_alpha(family_of("<>", 6)) == 0);
}

TEST_CASE("hexagon table") {
  for (const auto& row : golden::kHexagon) {
    const auto inv = compute_invariants(family_of(row.code.c_str(), 6));
    CHECK_MESSAGE(inv.betti[1] == row.b2, row.code);
    CHECK_MESSAGE(inv.r_cup == row.r_cup, row.code);
    CHECK_MESSAGE(inv.s == row.s, row.code);
  }
}

TEST_CASE("s needs every singleton below m to be short") {
  ShortFamily bad(4);
  for (Mask s : {Mask{0}, test::mask_of({4}), test::mask_of({2}), test::mask_of({3}), test::mask_of({2, 3})}) bad.insert(s);
  CHECK_THROWS_AS(s_alpha(bad), InvariantViolation);
}

TEST_CASE("field independence and duality for m <= 7") {
  for (int m = 3; m <= 7; ++m) {
    for (const auto& code : enumerate_codes(m).codes) {
      const auto family = short_family_of(code);
      CHECK(s_alpha(family, {Field::kGF2, true}) == s_alpha(family, {Field::kRationals, true}));
      const auto inv = compute_invariants(family);
      CHECK(std::equal(inv.betti.begin(), inv.betti.end(), inv.betti.rbegin()));
      CHECK(inv.r_cup <= (inv.betti.size() > 1 ? inv.betti[1] : 0));
    }
  }
}

TEST_CASE("invariants tell the chambers apart for m = 5, 6, 7") {
  for (int m = 5; m <= 7; ++m) {
    std::vector<LabelledInvariants> items;
    for (const auto& code : enumerate_codes(m).codes) {
      items.push_back({format_code(code), compute_invariants(short_family_of(code))});
    }
    const auto report = distinguish(items);
    CHECK(report.duplicates.empty());
    CHECK(report.distinct == items.size());
  }
}

TEST_CASE("ring oracle examples") {
  CHECK(ring_oracle(family_of("<6>", 6), 3) == std::vector<long>{1, 1, 1, 1});
  CHECK(ring_oracle(family_of("<54>", 5), 2) == std::vector<long>{1, 5, 1});
  CHECK(ring_oracle(family_of("<41>", 4), 1) == std::vector<long>{1, 1});
  CHECK(ring_oracle(family_of("<>", 5), 2) == std::vector<long>{0, 0, 0});
}

TEST_CASE("ring oracle equals the Betti numbers for m <= 6") {
  for (int m = 3; m <= 6; ++m) {
    for (const auto& code : enumerate_codes(m).codes) {
      const auto family = short_family_of(code);
      CHECK_MESSAGE(ring_oracle(family, m - 3) == betti_recurrence(family), format_code(code));
    }
  }
}

TEST_CASE("squaring rank in the quotient ring equals r_cup for m <= 6") {
  for (int m = 4; m <= 6; ++m) {
    for (const auto& code : enumerate_codes(m).codes) {
      const auto family = short_family_of(code);
      CHECK_MESSAGE(cup_square_rank(family) == r_cup(family), format_code(code));
    }
  }
}

TEST_CASE("GF(2) echelon form") {
  Gf2Echelon e(130);
  auto row = [&](std::initializer_list<std::size_t> bits) {
    auto r = e.make_row();
    for (auto b : bits) r[b / 64] ^= std::uint64_t{1} << (b % 64);
    return r;
  };
  CHECK(e.insert(row({0, 129})));
  CHECK(e.insert(row({1, 129})));
  CHECK_FALSE(e.insert(row({0, 1})));
  CHECK_FALSE(e.insert(row({})));
  CHECK(e.insert(row({64})));
  CHECK(e.rank() == 3);
}
