#include <doctest.h>

#include <sstream>

#include "chamberscope/enumeration.hpp"
#include "chamberscope/invariants.hpp"
#include "chamberscope/records.hpp"
#include "chamberscope/verify.hpp"
#include "helpers.hpp"

using namespace chamberscope;

TEST_CASE("code records") {
  CHECK(code_to_json(parse_code("<9642>", 9)) == R"({"m":9,"code":"<9642>","genes":[[9,6,4,2]]})");
  CHECK(code_from_json(R"({"m":9,"code":"<9642>","genes":[[9,6,4,2]]})", 9) == parse_code("<9642>", 9));
  CHECK(code_from_json("<621,63>", 6) == parse_code("<621,63>", 6));
  CHECK_THROWS_AS(code_from_json(R"({"m":8,"code":"<8>"})", 9), RecordFormatError);
  CHECK_THROWS_AS(code_from_json("{broken", 9), RecordFormatError);
  std::istringstream in("# header\n\n<5>\n{\"m\":5,\"code\":\"<521>\"}\n");
  const auto codes = read_codes(in, 5);
  REQUIRE(codes.size() == 2);
  CHECK(format_code(codes[1]) == "<521>");
  const GeneticCode stratum = parse_code("<42=>", 4);
  CHECK(code_from_json(code_to_json(stratum), 4) == stratum);
}

TEST_CASE("chamber records round trip for m <= 7") {
  for (int m = 3; m <= 7; ++m) {
    for (auto r : enumerate_chambers(m)) {
      r.invariants = compute_invariants(short_family_of(r.code));
      const std::string line = chamber_to_json(r);
      CHECK(chamber_to_json(chamber_from_json(line)) == line);
    }
  }
}

TEST_CASE("chamber record fields") {
  auto r = analyze_chamber(parse_code("<63>", 6));
  const std::string line = chamber_to_json(r);
  CHECK(line.rfind(R"({"m":6,"code":"<63>","realizable":true,"a_min":[1,1,1,2,2,4],"l1":11,"min_x1":"1",)", 0) == 0);
  CHECK(line.find(R"("in_plus_image":true,"toric":true)") != std::string::npos);

  ChamberRecord half = r;
  half.a_min = test::vec({1, 1, 1, 2, 2, 4});
  (*half.a_min)(0) = Rational(3, 2);
  half.l1 = Rational(23, 2);
  const std::string text = chamber_to_json(half);
  CHECK(text.find(R"("a_min":["3/2",1,1,2,2,4],"l1":"23/2")") != std::string::npos);
  CHECK(*chamber_from_json(text).l1 == Rational(23, 2));

  const auto none = realize(parse_code("<9642>", 9));
  CHECK(chamber_to_json(none) == R"({"m":9,"code":"<9642>","realizable":false})");
  CHECK_THROWS_AS(chamber_from_json(R"({"m":6,"code":"<63>"})"), RecordFormatError);
}

TEST_CASE("stratum records") {
  const auto s = minus_map(parse_code("<53>", 5));
  CHECK(stratum_to_json(s) == R"({"m":4,"code":"<42=>","is_chamber":false,"plus_image":"<53>"})");
}

TEST_CASE("hashes and manifest") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hash_label(0xaf63dc4c8601ec8cULL) == "fnv1a64:af63dc4c8601ec8c");
  RunManifest manifest;
  manifest.command = "enumerate";
  manifest.m = 5;
  manifest.outputs = {"codes.jsonl"};
  manifest.content_hash = hash_label(1);
  const std::string json = manifest_to_json(manifest);
  CHECK(json.find(R"("command": "enumerate")") != std::string::npos);
  CHECK(json.find(R"("content_hash": "fnv1a64:0000000000000001")") != std::string::npos);
}

TEST_CASE("invariant table") {
  auto records = enumerate_chambers(6);
  for (auto& r : records) r.invariants = compute_invariants(short_family_of(r.code));
  const std::string csv = render_table(records, TableFormat::kCsv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
  CHECK(csv.rfind("code,betti,b2,r_cup,s,a_min,l1\n\"<>\",", 0) == 0);
  CHECK(csv.find("\"<65>\",\"(1,6,6,1)\",6,6,6,\"(1,1,1,1,1,2)\",7\n") != std::string::npos);
  const std::string md = render_table(records, TableFormat::kMarkdown);
  CHECK(md.find("| `<621,63>` |") != std::string::npos);
  records[3].invariants.reset();
  CHECK_THROWS(render_table(records, TableFormat::kCsv));
}

TEST_CASE("lattice strata counts for small k") {
  CHECK(count_strata_by_lattice(3, 8) == 3);
  CHECK(count_strata_by_lattice(4, 8) == 7);
  CHECK(count_strata_by_lattice(5, 12) == 21);
  CHECK(count_strata_by_lattice(6, 16) == 118);
  CHECK_THROWS(count_strata_by_lattice(9, 4));
}
