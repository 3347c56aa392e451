#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chamberscope/short_family.hpp"

namespace chamberscope {

/// Raised when a structural identity that must hold for chamber families fails.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Integer polynomial in t; coefficients[k] multiplies t^k.
using Polynomial = std::vector<long>;

/// Betti numbers b0, b2, ..., b_{2(m-3)}, the cup-square rank and the number
/// of degree-2 projective solutions.
struct InvariantBundle {
  std::vector<long> betti;
  Polynomial poincare;
  long r_cup = 0;
  long s = 0;
  std::optional<std::vector<long>> ring_dimensions;

  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

/// Sum over J in S_m of (t^{2(|J|-1)} - t^{2(m-1-|J|)}), divided by 1 - t^2.
/// Throws InvariantViolation if the division leaves a remainder.
Polynomial poincare_direct(const ShortFamily& family);

/// b_{2i} - b_{2i-2} = NS_i(S_m) - NS_{m-2-i}(S_m), starting from zero.
std::vector<long> betti_recurrence(const ShortFamily& family);

/// 1 + NS_1 - NS_{m-3} - NS_{m-4} over S_m; 0 for the empty chamber.
long r_cup(const ShortFamily& family);

enum class Field { kGF2, kRationals };

struct SolOptions {
  Field field = Field::kGF2;
  /// Include the degree-1 relators coming from two-element non-short L.
  bool include_linear_r3 = true;
};

/// Number of v in {0,1}^{m-1} (with r = -1) on which every relator of degree
/// at most 2 vanishes; 0 for the empty chamber.
long s_alpha(const ShortFamily& family, const SolOptions& options = {});

/// True when S_m is empty (the chamber <>).
bool is_empty_chamber(const ShortFamily& family);

/// Betti (via the recurrence, cross-checked against the direct formula),
/// r_cup and s. The empty chamber gets the all-zero bundle.
InvariantBundle compute_invariants(const ShortFamily& family);

struct DistinguishReport {
  std::size_t chambers = 0;
  std::size_t distinct = 0;
  /// Groups of codes sharing one (betti, r_cup, s) tuple.
  std::vector<std::vector<std::string>> duplicates;
};

struct LabelledInvariants {
  std::string code;
  InvariantBundle invariants;
};

DistinguishReport distinguish(const std::vector<LabelledInvariants>& items);

/// Order used for invariant tables: betti vector, then r_cup, then s.
bool invariant_order(const InvariantBundle& a, const InvariantBundle& b);

}  // namespace chamberscope
