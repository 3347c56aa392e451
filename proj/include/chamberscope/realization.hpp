#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chamberscope/genetic_code.hpp"
#include "chamberscope/invariants.hpp"
#include "chamberscope/lp.hpp"
#include "chamberscope/rational.hpp"
#include "chamberscope/short_family.hpp"

namespace chamberscope {

class NotRealizable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInPlusImage : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shared ↪ table for small m (built once per m, thread-safe); nullptr above m = 10.
const DominanceTable* dominance_table(int m);

/// S(code) using the shared table when available.
ShortFamily short_family_of(const GeneticCode& code);

enum class P1Rows {
  kReduced,  ///< one row per ↪-maximal member of S
  kFull,     ///< one row per member of S
};

/// The shifted cone: x1 >= 0, x_{i+1} >= x_i, and for each emitted I in S
/// sum_{i not in I} x_i - sum_{i in I} x_i >= 1. Objective: sum of x_i.
LpProblem<Rational> build_p1(const GeneticCode& code, P1Rows rows = P1Rows::kReduced);
LpProblem<Rational> build_p1(const ShortFamily& family, P1Rows rows = P1Rows::kReduced);

/// S(a) from the inequalities: I in S iff sum_I a < sum_{not I} a.
/// Returns nullopt when some subset sits exactly on a wall.
std::optional<ShortFamily> short_family_of_point(const Vec<Rational>& a);

struct ChamberRecord {
  int m = 0;
  GeneticCode code;
  bool realizable = false;
  std::optional<Vec<Rational>> a_min;
  std::optional<Rational> l1;
  std::optional<Rational> min_x1;
  bool in_plus_image = false;
  bool toric = false;

  // Monitors: recorded, never assumed.
  std::optional<bool> a_min_integral;
  std::optional<bool> l1_odd;
  std::optional<bool> unique_optimum;
  /// When min x1 == 1: the witness vertex is integral with odd sum.
  std::optional<bool> plus_witness_ok;
  std::optional<Vec<Rational>> toric_witness;

  std::optional<InvariantBundle> invariants;
};

/// Realizability via the shifted cone, and a_min as the lexicographically
/// smallest l1-minimizer.
ChamberRecord realize(const GeneticCode& code);

/// Exact minimum of x1 over the shifted cone.
Rational min_first_coord(const GeneticCode& code);

struct PlusImageTest {
  Rational min_x1;
  bool in_image = false;
  /// Only when min_x1 == 1.
  std::optional<Vec<Rational>> witness;
  std::optional<bool> witness_ok;
};

PlusImageTest plus_image_test(const GeneticCode& code);

/// min x1 <= 1; uses the stored minimum when present.
bool in_plus_image(const ChamberRecord& record);

struct ToricTest {
  bool holds = false;
  /// Integral point of the chamber with a_m >= a_1 + ... + a_{m-5}.
  std::optional<Vec<Rational>> witness;
};

ToricTest toric_test(const GeneticCode& code);
bool toric_criterion(const GeneticCode& code);

/// Code of type m -> chamber code of type m+1: a short gene P becomes P+1 with 1
/// added, an almost-short gene becomes P+1.
GeneticCode plus_map(const GeneticCode& code);

struct StratumRecord {
  int m = 0;  ///< ambient size of the stratum
  GeneticCode code;
  bool is_chamber = false;
  GeneticCode plus_image;
};

/// Inverse of plus_map on chambers in its image. With `check_image`, the
/// in-image test is run and NotInPlusImage thrown when it fails.
StratumRecord minus_map(const GeneticCode& code, bool check_image = true);

/// Realize + in-image + toric for one code (no invariants).
ChamberRecord analyze_chamber(const GeneticCode& code);

/// Whether every vertex of the shifted cone has integral coordinates.
struct VertexIntegrality {
  bool integral = true;
  bool complete = true;
  std::size_t vertices = 0;
};

VertexIntegrality p1_vertex_integrality(const GeneticCode& code);

struct ChamberOptions {
  int jobs = 1;
};

/// Every virtual code of type m, analyzed, in canonical code order.
std::vector<ChamberRecord> enumerate_chambers(int m, const ChamberOptions& options = {});

/// Number of strata of R^k_up: chambers of R^{k+1}_up in the image of plus_map.
long count_strata(int k, const ChamberOptions& options = {});

}  // namespace chamberscope
