#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "chamberscope/enumeration.hpp"
#include "chamberscope/golden.hpp"
#include "chamberscope/short_family.hpp"
#include "helpers.hpp"

using namespace chamberscope;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> names(const CodeSet& set) {
  std::vector<std::string> out;
  for (const auto& c : set.codes) out.push_back(format_code(c));
  return out;
}

std::set<std::vector<Mask>> gene_sets(const CodeSet& set) {
  std::set<std::vector<Mask>> out;
  for (const auto& c : set.codes) {
    auto genes = c.short_genes();
    std::sort(genes.begin(), genes.end());
    out.insert(genes);
  }
  return out;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("chamberscope-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("code text forms") {
  const GeneticCode a = parse_code("<9642>", 9);
  REQUIRE(a.size() == 1);
  CHECK(a.genes()[0].mask == test::mask_of({9, 6, 4, 2}));
  const GeneticCode b = parse_code("<63,621>", 6);
  CHECK(format_code(b) == "<621,63>");
  REQUIRE(b.size() == 2);
  CHECK(b.genes()[0].mask == test::mask_of({6, 2, 1}));
  const GeneticCode c = parse_code("<41=>", 4);
  REQUIRE(c.size() == 1);
  CHECK(c.genes()[0].mark == GeneMark::kAlmostShort);
  CHECK_FALSE(c.is_chamber_type());
  CHECK(format_code(c) == "<41=>");
  CHECK(format_code(parse_code("<>", 5)) == "<>");
  CHECK_THROWS_AS(parse_code("<53>", 6), InvalidCode);       // gene without m
  CHECK_THROWS_AS(parse_code("<62,61>", 6), InvalidCode);    // 61 embeds in 62
  CHECK_THROWS_AS(parse_code("9642", 9), InvalidCode);
}

TEST_CASE("singleton codes") {
  CHECK(names(singleton_codes(3)) == std::vector<std::string>{"<3>"});
  const auto five = names(singleton_codes(5));
  CHECK(std::set<std::string>(five.begin(), five.end()) ==
        std::set<std::string>{"<5>", "<51>", "<52>", "<53>", "<54>", "<521>"});
}

TEST_CASE("small code sets") {
  CHECK(names(enumerate_codes(3)) == std::vector<std::string>{"<>", "<3>"});
  const auto four = names(enumerate_codes(4));
  CHECK(std::set<std::string>(four.begin(), four.end()) == std::set<std::string>{"<>", "<4>", "<41>"});
}

TEST_CASE("code counts m = 3..8") {
  for (int m = 3; m <= 8; ++m) {
    CHECK_MESSAGE(static_cast<long>(enumerate_codes(m).codes.size()) == golden::kChamberCounts.at(m), "m = " << m);
  }
}

TEST_CASE("clique enumeration equals filtered antichains for m <= 5") {
  for (int m = 3; m <= 5; ++m) {
    std::vector<Mask> candidates;
    const Mask top = element_bit(m);
    for (Mask rest = 0; rest < top; ++rest) candidates.push_back(rest | top);
    std::set<std::vector<Mask>> brute;
    const std::size_t n = candidates.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
      std::vector<Mask> genes;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick >> i & 1U) genes.push_back(candidates[i]);
      }
      bool antichain = true;
      for (Mask x : genes) {
        for (Mask y : genes) antichain = antichain && (x == y || !dominates_mask(x, y, m));
      }
      if (!antichain || !is_virtual_code(genes, m)) continue;
      std::sort(genes.begin(), genes.end());
      brute.insert(genes);
    }
    CHECK_MESSAGE(brute == gene_sets(enumerate_codes(m)), "m = " << m);
  }
}

TEST_CASE("codes are in bijection with cuts for m <= 4") {
  for (int m = 3; m <= 4; ++m) {
    const std::size_t subsets = std::size_t{1} << m;
    std::set<std::vector<Mask>> cuts;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
      ShortFamily family(m);
      bool complementary = true;
      for (Mask s = 0; s < subsets; ++s) {
        const bool in = pick >> s & 1U;
        // axiom (A): exactly one of I and its complement.
        if (in == static_cast<bool>(pick >> complement_mask(s, m) & 1U)) complementary = false;
        if (in) family.insert(s);
      }
      if (complementary && is_cut(family)) cuts.insert(family.members());
    }
    std::set<std::vector<Mask>> reconstructed;
    for (const auto& code : enumerate_codes(m).codes) reconstructed.insert(reconstruct_short_family(code).members());
    CHECK(cuts == reconstructed);
  }
}

TEST_CASE("distinct codes give distinct cuts for m <= 6") {
  for (int m = 3; m <= 6; ++m) {
    const auto codes = enumerate_codes(m).codes;
    std::set<std::vector<Mask>> families;
    for (const auto& code : codes) families.insert(reconstruct_short_family(code).members());
    CHECK(families.size() == codes.size());
  }
}

TEST_CASE("enumeration does not depend on the worker count") {
  EnumerationOptions serial;
  EnumerationOptions threaded;
  threaded.jobs = 4;
  CHECK(names(enumerate_codes(7, serial)) == names(enumerate_codes(7, threaded)));
}

TEST_CASE("interrupted enumeration resumes to the same result") {
  const fs::path dir = scratch_dir("resume");
  const auto reference = names(enumerate_codes(8));

  EnumerationOptions options;
  options.checkpoint_dir = dir;
  options.checkpoint_interval = 200;
  options.stop_after_checkpoint = [](std::size_t written) { return written == 3; };
  CHECK_THROWS_AS(enumerate_codes(8, options), EnumerationInterrupted);
  CHECK(fs::exists(dir / "enumerate-m8.state.json"));

  // A torn write after the last checkpoint must be discarded on resume.
  {
    std::ofstream partial(dir / "enumerate-m8.partial.txt", std::ios::app);
    partial << "<8765";
  }
  options.stop_after_checkpoint = nullptr;
  CHECK(names(enumerate_codes(8, options)) == reference);
  CHECK_FALSE(fs::exists(dir / "enumerate-m8.state.json"));
  fs::remove_all(dir);
}

TEST_CASE("corrupt checkpoint is reported") {
  const fs::path dir = scratch_dir("corrupt");
  fs::create_directories(dir);
  {
    std::ofstream state(dir / "enumerate-m6.state.json");
    state << "{not json";
  }
  EnumerationOptions options;
  options.checkpoint_dir = dir;
  CHECK_THROWS_AS(enumerate_codes(6, options), CheckpointError);
  fs::remove_all(dir);
}

TEST_CASE("out of range type") {
  CHECK_THROWS_AS(enumerate_codes(2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_codes(17), std::invalid_argument);
}
