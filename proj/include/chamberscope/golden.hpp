#pragma once

#include <map>
#include <string>
#include <vector>

namespace chamberscope::golden {

/// |Ch(R^m)| for m = 3..9.
inline const std::map<int, long> kChamberCounts = {{3, 2}, {4, 3}, {5, 7}, {6, 21}, {7, 135}, {8, 2470}, {9, 175428}};

inline constexpr long kVirtualCodes9 = 319124;

/// |Str(R^k)| for k = 3..8 as published in the summary table.
inline const std::map<int, long> kStrataCounts = {{3, 3}, {4, 7}, {5, 21}, {6, 117}, {7, 1506}, {8, 62254}};

/// The same quantity for k = 6 as stated in the discussion of the in-image test.
inline constexpr long kStrata6Alternative = 118;

/// Chambers of R^7 failing the in-image test.
inline constexpr long kNotInImage7 = 18;

struct AMinRow {
  std::string code;
  std::vector<long> a_min;
};

inline const std::map<int, std::vector<AMinRow>> kAMin = {
    {3, {{"<>", {0, 0, 1}}, {"<3>", {1, 1, 1}}}},
    // <41>: (0,1,1,1) from the correspondence tables; the 4-gon table prints (1,2,2,2).
    {4, {{"<>", {0, 0, 0, 1}}, {"<4>", {1, 1, 1, 2}}, {"<41>", {0, 1, 1, 1}}}},
    {5,
     {{"<>", {0, 0, 0, 0, 1}},
      {"<5>", {1, 1, 1, 1, 3}},
      {"<51>", {0, 1, 1, 1, 2}},
      {"<52>", {1, 1, 2, 2, 3}},
      {"<521>", {0, 0, 1, 1, 1}},
      {"<53>", {1, 1, 1, 2, 2}},
      {"<54>", {1, 1, 1, 1, 1}}}},
};

/// Printed a_min of <41> in the 4-gon table (a non-minimal point of the chamber).
inline const std::vector<long> kAMin41Printed = {1, 2, 2, 2};

struct HexagonRow {
  std::string code;
  long b2;
  long r_cup;
  long s;
  std::vector<long> a_min;
  long l1;
};

/// All hexagon chambers in (b2, r_cup, s) order.
inline const std::vector<HexagonRow> kHexagon = {
    {"<>", 0, 0, 0, {0, 0, 0, 0, 0, 1}, 1},
    {"<6>", 1, 1, 1, {1, 1, 1, 1, 1, 4}, 9},
    {"<61>", 2, 2, 2, {0, 1, 1, 1, 1, 3}, 7},
    {"<6321>", 3, 0, 0, {0, 0, 0, 1, 1, 1}, 3},
    {"<621>", 3, 2, 0, {0, 0, 1, 1, 1, 2}, 5},
    {"<62>", 3, 3, 3, {1, 1, 2, 2, 2, 5}, 13},
    {"<632>", 4, 1, 1, {1, 1, 1, 3, 3, 4}, 13},
    {"<631>", 4, 2, 0, {0, 1, 1, 2, 2, 3}, 9},
    {"<621,63>", 4, 3, 1, {1, 1, 2, 3, 3, 5}, 15},
    {"<63>", 4, 4, 4, {1, 1, 1, 2, 2, 4}, 11},
    {"<641>", 5, 2, 0, {0, 1, 1, 1, 2, 2}, 7},
    {"<632,64>", 5, 2, 2, {1, 1, 1, 2, 3, 3}, 11},
    {"<631,64>", 5, 3, 1, {1, 2, 2, 3, 4, 5}, 17},
    {"<621,64>", 5, 4, 2, {1, 1, 2, 2, 3, 4}, 13},
    {"<64>", 5, 5, 5, {1, 1, 1, 1, 2, 3}, 9},
    {"<651>", 6, 2, 0, {0, 1, 1, 1, 1, 1}, 5},
    {"<641,65>", 6, 3, 1, {1, 2, 2, 2, 3, 3}, 13},
    {"<632,65>", 6, 3, 3, {1, 1, 1, 2, 2, 2}, 9},
    {"<631,65>", 6, 4, 2, {1, 2, 2, 3, 3, 4}, 15},
    {"<621,65>", 6, 5, 3, {1, 1, 2, 2, 2, 3}, 11},
    {"<65>", 6, 6, 6, {1, 1, 1, 1, 1, 2}, 7},
};

/// Betti vectors of the pentagon chambers, read off their diffeomorphism types
/// (<52> is (S^2 x S^2) # -CP^2; <51> and <521> are the only pair sharing b).
inline const std::map<std::string, std::vector<long>> kPentagonBetti = {
    {"<5>", {1, 1, 1}},   {"<51>", {1, 2, 1}}, {"<52>", {1, 3, 1}},
    {"<521>", {1, 2, 1}}, {"<53>", {1, 4, 1}}, {"<54>", {1, 5, 1}},
};

inline const std::map<std::string, long> kPentagonRCup = {{"<52>", 1}, {"<521>", 0}};

struct Correspondence {
  std::string chamber;  ///< code of type m
  std::string stratum;  ///< code of type m - 1
};

inline const std::map<int, std::vector<Correspondence>> kCorrespondences = {
    {4, {{"<>", "<>"}, {"<4>", "<3=>"}, {"<41>", "<3>"}}},
    {5,
     {{"<>", "<>"},
      {"<5>", "<4=>"},
      {"<51>", "<4>"},
      {"<52>", "<41=>"},
      {"<521>", "<41>"},
      {"<53>", "<42=>"},
      {"<54>", "<43=>"}}},
};

struct ToricRow {
  std::string code;
  std::vector<long> a_min;
};

/// Heptagon chambers failing the toric criterion, as printed.
inline const std::vector<ToricRow> kToricFailures7 = {
    {"<754,762>", {3, 3, 3, 4, 4, 5, 5}},
    {"<764>", {2, 2, 2, 2, 3, 3, 3}},
    {"<765>", {1, 1, 1, 1, 1, 1, 1}},
};

inline constexpr long kToricFailures8 = 217;

}  // namespace chamberscope::golden
