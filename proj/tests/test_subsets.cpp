#include <doctest.h>

#include <algorithm>

#include "chamberscope/short_family.hpp"
#include "chamberscope/subset.hpp"
#include "chamberscope/verify.hpp"
#include "helpers.hpp"

using namespace chamberscope;
using test::mask_of;

TEST_CASE("domination examples") {
  const Subset b = Subset::from_elements({9, 6, 4, 2}, 9);
  CHECK(dominates(Subset(0, 9), b));
  CHECK(dominates(Subset::from_elements({9, 5, 3, 1}, 9), b));
  CHECK_FALSE(dominates(Subset::from_elements({9, 4, 3, 2, 1}, 9), b));
  CHECK(dominates(Subset::from_elements({6, 2}, 9), b));
  CHECK_FALSE(dominates(Subset::from_elements({9, 7, 5}, 9), b));
}

TEST_CASE("subsets dominate their supersets") {
  for (int m = 1; m <= 6; ++m) {
    const Mask n = Mask{1} << m;
    for (Mask b = 0; b < n; ++b) {
      for (Mask a = b;; a = (a - 1) & b) {
        CHECK(dominates_mask(a, b, m));
        if (a == 0) break;
      }
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement(Subset(0, 5)) == Subset(full_mask(5), 5));
  CHECK(complement(Subset::from_elements({9, 6, 4, 2}, 9)) == Subset::from_elements({8, 7, 5, 3, 1}, 9));
}

TEST_CASE("counting form of domination agrees with injective-map search for m <= 7") {
  for (int m = 1; m <= 7; ++m) {
    const Mask n = Mask{1} << m;
    long mismatches = 0;
    for (Mask a = 0; a < n; ++a) {
      for (Mask b = 0; b < n; ++b) {
        if (dominates_mask(a, b, m) != dominates_by_search(a, b, m)) ++mismatches;
      }
    }
    CHECK_MESSAGE(mismatches == 0, "m = " << m);
  }
}

TEST_CASE("dominance table matches the mask form") {
  for (int m = 1; m <= 6; ++m) {
    const DominanceTable table(m);
    const Mask n = Mask{1} << m;
    for (Mask a = 0; a < n; ++a) {
      for (Mask b = 0; b < n; ++b) REQUIRE(table(a, b) == dominates_mask(a, b, m));
    }
  }
}

TEST_CASE("covers are exactly the immediate successors") {
  for (int m = 1; m <= 5; ++m) {
    const Mask n = Mask{1} << m;
    for (Mask a = 0; a < n; ++a) {
      std::vector<Mask> expected;
      for (Mask b = 0; b < n; ++b) {
        if (b == a || !dominates_mask(a, b, m)) continue;
        bool immediate = true;
        for (Mask c = 0; c < n && immediate; ++c) {
          if (c != a && c != b && dominates_mask(a, c, m) && dominates_mask(c, b, m)) immediate = false;
        }
        if (immediate) expected.push_back(b);
      }
      auto up = upper_covers(a, m);
      std::sort(up.begin(), up.end());
      CHECK(up == expected);
      for (Mask b : expected) {
        const auto down = lower_covers(b, m);
        CHECK(std::find(down.begin(), down.end(), a) != down.end());
      }
    }
  }
}

TEST_CASE("subset text forms") {
  CHECK(format_subset(Subset::from_elements({9, 6, 4, 2}, 9)) == "9642");
  CHECK(parse_subset("531", 5) == Subset::from_elements({5, 3, 1}, 5));
  CHECK(parse_subset("{12,3}", 12) == Subset::from_elements({12, 3}, 12));
  CHECK(format_subset(Subset::from_elements({12, 3}, 12)) == "{12,3}");
  CHECK_THROWS_AS(parse_subset("7", 5), InvalidSubset);
  CHECK_THROWS_AS(parse_subset("33", 5), InvalidSubset);
}

TEST_CASE("short family reconstruction for m = 3") {
  const ShortFamily s1 = reconstruct_short_family(parse_code("<3>", 3));
  CHECK(s1.members() == std::vector<Mask>{0, mask_of({1}), mask_of({2}), mask_of({3})});
  const ShortFamily s0 = reconstruct_short_family(parse_code("<>", 3));
  CHECK(s0.members() == std::vector<Mask>{0, mask_of({1}), mask_of({2}), mask_of({1, 2})});
  CHECK(is_cut(s1));
  CHECK(is_cut(s0));
}

TEST_CASE("cut axioms reject bad families") {
  ShortFamily both(3);
  for (Mask s : {Mask{0}, mask_of({1}), mask_of({2}), mask_of({3}), mask_of({2, 3})}) both.insert(s);
  CHECK_FALSE(is_cut(both));  // {1} and {2,3} together
  ShortFamily only_empty(3);
  only_empty.insert(0);
  CHECK_FALSE(is_cut(only_empty));
}

TEST_CASE("NS counts") {
  const std::vector<Mask> s5 = {mask_of({5}), mask_of({5, 1}), mask_of({5, 2}), mask_of({5, 3}), mask_of({5, 4})};
  const NsVector ns = ns_counts(s5, 5);
  CHECK(ns[0] == 1);
  CHECK(ns[1] == 4);
  CHECK(ns[2] == 0);
  CHECK(ns[-1] == 0);
  const NsVector none = ns_counts({}, 5);
  for (int i = 0; i < 5; ++i) CHECK(none[i] == 0);
  const ShortFamily s6 = reconstruct_short_family(parse_code("<6>", 6));
  const NsVector top = ns_counts(s6.members_with_top(), 6);
  CHECK(top[0] == 1);
  for (int i = 1; i < 6; ++i) CHECK(top[i] == 0);
}

TEST_CASE("maximal members generate the family") {
  const ShortFamily s = reconstruct_short_family(parse_code("<621,63>", 6));
  for (Mask x : s.members()) {
    const auto top = maximal_members(s);
    CHECK(std::any_of(top.begin(), top.end(), [&](Mask y) { return dominates_mask(x, y, 6); }));
  }
  CHECK(genes_of(s) == parse_code("<621,63>", 6).short_genes());
}
