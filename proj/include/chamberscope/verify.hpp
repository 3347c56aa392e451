#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chamberscope/subset.hpp"

namespace chamberscope {

/// A ↪ B decided by backtracking over injective maps phi: A -> B with
/// phi(x) >= x. Reference oracle for the counting characterization.
bool dominates_by_search(Mask a, Mask b, int m);

/// Number of distinct wall-sign patterns (short / almost short / long) over
/// sorted integer k-tuples with entries in [1, bound]. Every stratum is a
/// rational cone, so this converges to |Str(R^k)| as the bound grows.
std::size_t count_strata_by_lattice(int k, int bound);

struct CheckLine {
  int criterion = 0;
  std::string item;
  bool pass = false;
  std::string detail;
  /// For a failing line: an independent computation that agrees with the
  /// computed value rather than the expected one.
  std::optional<std::string> confirmation;
};

struct VerifyOptions {
  /// Largest m exercised by the default suite (3..8).
  int max_m = 8;
  /// Adds the m = 9 checks.
  bool long_run = false;
  int jobs = 1;
  /// Progress messages, one per stage; may be null.
  std::ostream* progress = nullptr;
};

struct VerifyReport {
  std::vector<CheckLine> lines;
  /// Conjecture-monitor counterexamples and other observations worth a look.
  std::vector<std::string> noteworthy;
  /// Informational results that are not pass/fail items.
  std::vector<std::string> notes;

  std::size_t failures() const;
  std::size_t unconfirmed_failures() const;
  bool all_pass() const { return failures() == 0; }
};

VerifyReport run_verification(const VerifyOptions& options);

/// Line-item table plus the noteworthy-findings section and a summary line.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace chamberscope
