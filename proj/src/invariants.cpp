#include "chamberscope/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <tuple>

namespace chamberscope {

namespace {

NsVector top_counts(const ShortFamily& family) {
  return ns_counts(family.members_with_top(), family.ground_size());
}

/// A monomial c * r^a * prod v_i^{e_i} with integer coefficient.
struct Term {
  long coefficient = 1;
  int r_power = 0;
  Mask linear = 0;   ///< variables with exponent 1
  Mask squared = 0;  ///< variables with exponent 2
};

using Relator = std::vector<Term>;

/// Relators of degree <= 2 in R, V_1..V_{m-1}.
std::vector<Relator> low_degree_relators(const ShortFamily& family, bool include_linear_r3) {
  const int m = family.ground_size();
  const Mask top = element_bit(m);
  const Mask lower = full_mask(m - 1);
  std::vector<Relator> out;
  for (int i = 1; i < m; ++i) {
    out.push_back({Term{1, 0, 0, element_bit(i)}, Term{1, 1, element_bit(i), 0}});
  }
  for (Mask l = 0; l <= lower; ++l) {
    const int size = std::popcount(l);
    if (size <= 2 && !family.contains(l | top)) out.push_back({Term{1, 0, l, 0}});
    if (size <= 3 && !family.contains(l)) {
      if (size == 2 && !include_linear_r3) continue;
      Relator relator;
      // Sub-masks s of l with s + {m} in S.
      for (Mask s = l;; s = (s - 1) & l) {
        if (family.contains(s | top)) {
          const int power = size - std::popcount(s) - 1;
          if (power < 0) throw InvariantViolation("relator with negative power of R");
          relator.push_back(Term{1, power, s, 0});
        }
        if (s == 0) break;
      }
      out.push_back(std::move(relator));
    }
  }
  return out;
}

long evaluate(const Relator& relator, Mask v, Field field) {
  long total = 0;
  for (const Term& t : relator) {
    if ((t.linear & ~v) || (t.squared & ~v)) continue;
    const long sign = (t.r_power % 2 == 0) ? 1 : -1;
    total += t.coefficient * sign;
  }
  return field == Field::kGF2 ? (total % 2 + 2) % 2 : total;
}

}  // namespace

bool is_empty_chamber(const ShortFamily& family) {
  return !family.contains(element_bit(family.ground_size()));
}

Polynomial poincare_direct(const ShortFamily& family) {
  const int m = family.ground_size();
  // Work in u = t^2: numerator sum_J (u^{|J|-1} - u^{m-1-|J|}).
  std::vector<long> numerator(static_cast<std::size_t>(m), 0);
  for (Mask j : family.members_with_top()) {
    const int size = std::popcount(j);
    const int low = size - 1;
    const int high = m - 1 - size;
    if (high < 0) throw InvariantViolation("full set cannot be short");
    numerator[static_cast<std::size_t>(low)] += 1;
    numerator[static_cast<std::size_t>(high)] -= 1;
  }
  std::vector<long> quotient(numerator.size(), 0);
  long running = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    running += numerator[k];
    quotient[k] = running;
  }
  if (running != 0) throw InvariantViolation("Poincare numerator not divisible by 1 - t^2");
  Polynomial p(2 * numerator.size(), 0);
  for (std::size_t k = 0; k < quotient.size(); ++k) p[2 * k] = quotient[k];
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<long> betti_recurrence(const ShortFamily& family) {
  const int m = family.ground_size();
  const NsVector ns = top_counts(family);
  std::vector<long> b(static_cast<std::size_t>(std::max(0, m - 2)), 0);
  long previous = 0;
  for (int i = 0; i <= m - 3; ++i) {
    previous += ns[i] - ns[m - 2 - i];
    b[static_cast<std::size_t>(i)] = previous;
  }
  return b;
}

long r_cup(const ShortFamily& family) {
  if (is_empty_chamber(family)) return 0;
  const int m = family.ground_size();
  const NsVector ns = top_counts(family);
  const long value = 1 + ns[1] - ns[m - 3] - ns[m - 4];
  if (ns[m - 3] != 0 && value != 0) {
    throw InvariantViolation("product-of-spheres chamber must have zero cup-square rank");
  }
  return value;
}

long s_alpha(const ShortFamily& family, const SolOptions& options) {
  if (is_empty_chamber(family)) return 0;
  const int m = family.ground_size();
  for (int i = 1; i < m; ++i) {
    if (!family.contains(element_bit(i))) {
      throw InvariantViolation("singleton {" + std::to_string(i) + "} is not short");
    }
  }
  const auto relators = low_degree_relators(family, options.include_linear_r3);
  long count = 0;
  const Mask n = Mask{1} << (m - 1);
  for (Mask v = 0; v < n; ++v) {
    bool ok = true;
    for (const auto& relator : relators) {
      if (evaluate(relator, v, options.field) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

InvariantBundle compute_invariants(const ShortFamily& family) {
  InvariantBundle bundle;
  const int m = family.ground_size();
  bundle.betti = betti_recurrence(family);
  bundle.poincare = poincare_direct(family);
  for (int i = 0; i <= m - 3; ++i) {
    const auto k = static_cast<std::size_t>(2 * i);
    const long direct = k < bundle.poincare.size() ? bundle.poincare[k] : 0;
    if (direct != bundle.betti[static_cast<std::size_t>(i)]) {
      throw InvariantViolation("Betti recurrence disagrees with the Poincare polynomial");
    }
  }
  bundle.r_cup = r_cup(family);
  bundle.s = s_alpha(family);
  return bundle;
}

bool invariant_order(const InvariantBundle& a, const InvariantBundle& b) {
  return std::tie(a.betti, a.r_cup, a.s) < std::tie(b.betti, b.r_cup, b.s);
}

DistinguishReport distinguish(const std::vector<LabelledInvariants>& items) {
  std::map<std::tuple<std::vector<long>, long, long>, std::vector<std::string>> groups;
  for (const auto& item : items) {
    groups[{item.invariants.betti, item.invariants.r_cup, item.invariants.s}].push_back(item.code);
  }
  DistinguishReport report;
  report.chambers = items.size();
  report.distinct = groups.size();
  for (auto& [key, codes] : groups) {
    if (codes.size() > 1) report.duplicates.push_back(std::move(codes));
  }
  return report;
}

}  // namespace chamberscope
