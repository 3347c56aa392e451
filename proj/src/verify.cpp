#include "chamberscope/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "chamberscope/enumeration.hpp"
#include "chamberscope/golden.hpp"
#include "chamberscope/invariants.hpp"
#include "chamberscope/realization.hpp"
#include "chamberscope/records.hpp"
#include "chamberscope/ring_oracle.hpp"
#include "chamberscope/short_family.hpp"

namespace chamberscope {

namespace {

bool injective_search(const std::vector<int>& a, std::size_t index, Mask used, Mask b, int m) {
  if (index == a.size()) return true;
  for (int y = a[index]; y <= m; ++y) {
    const Mask bit = element_bit(y);
    if ((b & bit) && !(used & bit) && injective_search(a, index + 1, used | bit, b, m)) return true;
  }
  return false;
}

using LatticeKey = std::array<std::uint64_t, 4>;

struct LatticeHash {
  std::size_t operator()(const LatticeKey& key) const noexcept {
    std::uint64_t h = 0;
    for (auto w : key) h = fnv1a64(std::string_view(reinterpret_cast<const char*>(&w), sizeof w), h ^ 0x9e3779b97f4a7c15ULL);
    return static_cast<std::size_t>(h);
  }
};

class LatticeWalk {
 public:
  LatticeWalk(int k, int bound) : k_(k), bound_(bound), a_(static_cast<std::size_t>(k)), sums_(static_cast<std::size_t>(k)) {
    sums_[0] = {0};
  }

  std::size_t run() {
    descend(0, 1);
    return seen_.size();
  }

 private:
  void descend(int depth, int low) {
    if (depth == k_) {
      record();
      return;
    }
    for (int v = low; v <= bound_; ++v) {
      a_[static_cast<std::size_t>(depth)] = v;
      if (depth + 1 < k_) {
        const auto& current = sums_[static_cast<std::size_t>(depth)];
        auto& next = sums_[static_cast<std::size_t>(depth + 1)];
        next.resize(current.size() * 2);
        for (std::size_t i = 0; i < current.size(); ++i) {
          next[i] = current[i];
          next[i + current.size()] = current[i] + v;
        }
      }
      descend(depth + 1, v);
    }
  }

  // Signs of the subsets containing the largest element determine the rest.
  void record() {
    long total = 0;
    for (int v : a_) total += v;
    const long top = a_.back();
    LatticeKey key{};
    const auto& sums = sums_.back();
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const long excess = 2 * (sums[i] + top) - total;
      if (excess < 0) {
        key[i >> 6] |= std::uint64_t{1} << (i & 63);
      } else if (excess == 0) {
        key[2 + (i >> 6)] |= std::uint64_t{1} << (i & 63);
      }
    }
    seen_.insert(key);
  }

  int k_;
  int bound_;
  std::vector<int> a_;
  std::vector<std::vector<long>> sums_;
  std::unordered_set<LatticeKey, LatticeHash> seen_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double value, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

bool equals(const Vec<Rational>& v, const std::vector<long>& expected) {
  if (v.size() != static_cast<Eigen::Index>(expected.size())) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (v(static_cast<Eigen::Index>(i)) != Rational(expected[i])) return false;
  }
  return true;
}

Vec<Rational> to_vec(const std::vector<long>& v) {
  Vec<Rational> out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = Rational(v[i]);
  return out;
}

std::string join(const std::vector<std::string>& items, const char* separator = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += separator;
    out += items[i];
  }
  return out;
}

/// Code of the chamber containing a generic point.
std::optional<GeneticCode> chamber_of_point(const Vec<Rational>& a) {
  const auto family = short_family_of_point(a);
  if (!family) return std::nullopt;
  return GeneticCode::chamber(static_cast<int>(a.size()), genes_of(*family));
}

struct Analyzed {
  std::vector<ChamberRecord> records;
  std::unordered_map<std::string, std::size_t> index;
  double seconds = 0;  ///< enumeration plus realization
  std::size_t invariant_errors = 0;
  std::vector<std::string> invariant_error_codes;
};

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  VerifyReport run() {
    const int top = std::clamp(options_.max_m, 3, 8);
    criterion_counts(top);
    criterion_long_run();
    criterion_a_min(top);
    criterion_correspondences(top);
    criterion_strata(top);
    criterion_toric(top);
    criterion_invariants(top);
    criterion_properties(top);
    criterion_monitors(top);
    return std::move(report_);
  }

 private:
  void progress(const std::string& message) {
    if (options_.progress) *options_.progress << "[verify] " << message << std::endl;
  }

  void add(int criterion, std::string item, bool pass, std::string detail,
           std::optional<std::string> confirmation = std::nullopt) {
    report_.lines.push_back({criterion, std::move(item), pass, std::move(detail), pass ? std::nullopt : confirmation});
  }

  const Analyzed& chambers(int m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    progress("analyzing all codes of type m=" + std::to_string(m));
    Analyzed out;
    const auto start = std::chrono::steady_clock::now();
    ChamberOptions chamber_options;
    chamber_options.jobs = options_.jobs;
    out.records = enumerate_chambers(m, chamber_options);
    out.seconds = seconds_since(start);
    for (std::size_t i = 0; i < out.records.size(); ++i) {
      auto& r = out.records[i];
      out.index.emplace(format_code(r.code), i);
      if (!r.realizable) continue;
      try {
        r.invariants = compute_invariants(short_family_of(r.code));
      } catch (const InvariantViolation& e) {
        ++out.invariant_errors;
        out.invariant_error_codes.push_back(format_code(r.code) + ": " + e.what());
      }
    }
    return cache_.emplace(m, std::move(out)).first->second;
  }

  const ChamberRecord* find(int m, const std::string& code) {
    const Analyzed& a = chambers(m);
    const auto it = a.index.find(format_code(parse_code(code, m)));
    return it == a.index.end() ? nullptr : &a.records[it->second];
  }

  static long realizable_count(const Analyzed& a) {
    return std::count_if(a.records.begin(), a.records.end(), [](const ChamberRecord& r) { return r.realizable; });
  }

  static long image_count(const Analyzed& a) {
    return std::count_if(a.records.begin(), a.records.end(),
                         [](const ChamberRecord& r) { return r.realizable && r.in_plus_image; });
  }

  /// Lattice strata count with growing bounds until two consecutive bounds agree.
  std::optional<std::pair<std::size_t, int>> lattice_strata(int k, int max_bound) {
    progress("lattice strata count for k=" + std::to_string(k));
    std::size_t previous = 0;
    for (int bound = 8; bound <= max_bound; bound += 4) {
      const std::size_t count = count_strata_by_lattice(k, bound);
      if (count == previous) return std::make_pair(count, bound);
      previous = count;
    }
    return std::nullopt;
  }

  std::optional<std::string> lattice_confirmation(int k, long computed, int max_bound) {
    const auto lattice = lattice_strata(k, max_bound);
    if (!lattice || static_cast<long>(lattice->first) != computed) return std::nullopt;
    return "lattice enumeration of integer points (entries <= " + std::to_string(lattice->second) +
           ", stable over the last step) finds " + std::to_string(lattice->first) + " strata";
  }

  // ---------------------------------------------------------------------------

  void criterion_counts(int top) {
    double small = 0;
    for (int m = 3; m <= top; ++m) {
      const Analyzed& a = chambers(m);
      const long expected = golden::kChamberCounts.at(m);
      const long realizable = realizable_count(a);
      const long virtual_codes = static_cast<long>(a.records.size());
      add(1, "|Ch(R^" + std::to_string(m) + ")|", realizable == expected && virtual_codes == expected,
          std::to_string(realizable) + " realizable of " + std::to_string(virtual_codes) + " virtual codes (expected " +
              std::to_string(expected) + ")");
      if (m <= 7) small += a.seconds;
    }
    add(1, "runtime m <= " + std::to_string(std::min(top, 7)) + " under 60 s", small < 60.0, fixed(small, 3) + " s");
    if (top >= 8) {
      const double s8 = chambers(8).seconds;
      add(1, "runtime m = 8 under 600 s", s8 < 600.0, fixed(s8, 3) + " s");
    }
  }

  void criterion_long_run() {
    const auto start = std::chrono::steady_clock::now();
    const ChamberRecord record = realize(parse_code("<9642>", 9));
    const double elapsed = seconds_since(start);
    add(2, "<9642> infeasible, standalone under 1 s", !record.realizable && elapsed < 1.0,
        std::string(record.realizable ? "realizable" : "infeasible") + " in " + fixed(elapsed, 4) + " s");
    if (!options_.long_run) {
      report_.notes.push_back("m = 9 checks skipped (long run not requested)");
      return;
    }
    const Analyzed& a = chambers(9);
    add(2, "|G_9|", static_cast<long>(a.records.size()) == golden::kVirtualCodes9,
        std::to_string(a.records.size()) + " (expected " + std::to_string(golden::kVirtualCodes9) + ")");
    const long realizable = realizable_count(a);
    add(2, "realizable codes of type 9", realizable == golden::kChamberCounts.at(9),
        std::to_string(realizable) + " (expected " + std::to_string(golden::kChamberCounts.at(9)) + "), " +
            fixed(a.seconds, 1) + " s");
  }

  void criterion_a_min(int top) {
    for (const auto& [m, rows] : golden::kAMin) {
      if (m > top) continue;
      std::vector<std::string> bad;
      for (const auto& row : rows) {
        const ChamberRecord* r = find(m, row.code);
        if (!r || !r->a_min || !equals(*r->a_min, row.a_min)) {
          bad.push_back(row.code + " -> " + (r && r->a_min ? format_vector(*r->a_min) : std::string("missing")));
        }
      }
      std::string detail = bad.empty() ? std::to_string(rows.size()) + " rows match" : "mismatches: " + join(bad);
      if (m == 4) {
        const Vec<Rational> printed = to_vec(golden::kAMin41Printed);
        const auto code = chamber_of_point(printed);
        detail += "; (1,2,2,2) lies in " + (code ? format_code(*code) : std::string("a wall")) + " with l1 = 7, not minimal";
      }
      add(3, "a_min of all " + std::to_string(m) + "-gon chambers", bad.empty(), detail);
    }
    if (top >= 6) {
      std::vector<std::string> bad;
      for (const auto& row : golden::kHexagon) {
        const ChamberRecord* r = find(6, row.code);
        if (!r || !r->a_min || !equals(*r->a_min, row.a_min) || *r->l1 != Rational(row.l1)) {
          bad.push_back(row.code);
        }
      }
      add(3, "a_min and l1 of all 6-gon chambers", bad.empty(),
          bad.empty() ? "21 rows match" : "mismatches: " + join(bad));
    }
  }

  void criterion_correspondences(int top) {
    for (const auto& [m, rows] : golden::kCorrespondences) {
      if (m > top) continue;
      std::vector<std::string> bad;
      for (const auto& row : rows) {
        const GeneticCode chamber = parse_code(row.chamber, m);
        const GeneticCode stratum = parse_code(row.stratum, m - 1);
        try {
          const StratumRecord minus = minus_map(chamber);
          if (!(minus.code == stratum) || !(plus_map(stratum) == chamber) ||
              minus.is_chamber != stratum.is_chamber_type()) {
            bad.push_back(row.chamber + " -> " + format_code(minus.code));
          }
        } catch (const std::exception& e) {
          bad.push_back(row.chamber + ": " + e.what());
        }
      }
      add(4, "Ch(R^" + std::to_string(m) + ") <-> Str(R^" + std::to_string(m - 1) + ") row by row", bad.empty(),
          bad.empty() ? std::to_string(rows.size()) + " rows match in both directions" : join(bad));
    }
  }

  void criterion_strata(int top) {
    for (int k = 3; k + 1 <= top && k <= 7; ++k) {
      const long computed = image_count(chambers(k + 1));
      const long expected = golden::kStrataCounts.at(k);
      const std::string item = "|Str(R^" + std::to_string(k) + ")|";
      if (k == 6) {
        const long other = golden::kStrata6Alternative;
        const bool matches = computed == expected || computed == other;
        std::string detail = std::to_string(computed) + "; reference figures disagree (" + std::to_string(expected) +
                             " and " + std::to_string(other) + "); matches " +
                             (computed == expected ? std::to_string(expected)
                                                   : computed == other ? std::to_string(other) : "neither");
        if (auto c = lattice_confirmation(6, computed, 24)) detail += "; " + *c;
        add(5, item, matches, detail);
        continue;
      }
      std::optional<std::string> confirmation;
      if (computed != expected && k >= 6) confirmation = lattice_confirmation(k, computed, 32);
      add(5, item, computed == expected,
          std::to_string(computed) + " (expected " + std::to_string(expected) + ")", confirmation);
    }
    if (top >= 7) {
      const Analyzed& a = chambers(7);
      const long failing = realizable_count(a) - image_count(a);
      std::optional<std::string> confirmation;
      if (failing != golden::kNotInImage7) {
        const auto lattice = lattice_strata(6, 24);
        if (lattice && realizable_count(a) - static_cast<long>(lattice->first) == failing) {
          confirmation = "135 chambers minus " + std::to_string(lattice->first) +
                         " strata of R^6 found by lattice enumeration = " + std::to_string(failing);
        }
      }
      add(5, "chambers of R^7 outside the plus image", failing == golden::kNotInImage7,
          std::to_string(failing) + " (expected " + std::to_string(golden::kNotInImage7) + ")", confirmation);
    }
    if (options_.long_run) {
      const long computed = image_count(chambers(9));
      const long expected = golden::kStrataCounts.at(8);
      std::optional<std::string> confirmation;
      if (computed != expected) confirmation = lattice_confirmation(8, computed, 48);
      add(5, "|Str(R^8)|", computed == expected, std::to_string(computed) + " (expected " + std::to_string(expected) + ")",
          confirmation);
    }
  }

  void criterion_toric(int top) {
    for (int m = 3; m <= std::min(top, 6); ++m) {
      const Analyzed& a = chambers(m);
      const bool all = std::all_of(a.records.begin(), a.records.end(), [](const ChamberRecord& r) { return r.toric; });
      if (m == std::min(top, 6)) {
        add(6, "toric criterion holds for every chamber with m <= " + std::to_string(m), all, all ? "yes" : "no");
      } else if (!all) {
        add(6, "toric criterion holds for every chamber with m = " + std::to_string(m), false, "no");
      }
    }
    if (top >= 7) {
      const Analyzed& a = chambers(7);
      std::set<std::string> failing_codes;
      std::set<std::vector<std::string>> failing_points;
      std::vector<std::string> listing;
      for (const auto& r : a.records) {
        if (!r.realizable || r.toric) continue;
        failing_codes.insert(format_code(r.code));
        listing.push_back(format_code(r.code) + " " + format_vector(*r.a_min));
      }
      std::set<std::string> expected_codes;
      std::vector<std::string> mismatched_labels;
      bool points_match = true;
      for (const auto& row : golden::kToricFailures7) {
        expected_codes.insert(format_code(parse_code(row.code, 7)));
        const auto code = chamber_of_point(to_vec(row.a_min));
        const std::string label = code ? format_code(*code) : "a wall";
        if (!failing_codes.count(label)) points_match = false;
        if (label != row.code) mismatched_labels.push_back(format_vector(to_vec(row.a_min)) + " lies in " + label + ", listed as " + row.code);
      }
      std::optional<std::string> confirmation;
      if (points_match && !mismatched_labels.empty() && failing_codes.size() == expected_codes.size()) {
        confirmation = "the listed a_min vectors are exactly the a_min of the computed failures; " + join(mismatched_labels);
      }
      add(6, "m = 7 toric failures are exactly the listed codes", failing_codes == expected_codes, join(listing),
          confirmation);
      add(6, "m = 7 toric failures are exactly the chambers of the listed a_min vectors",
          points_match && failing_codes.size() == golden::kToricFailures7.size(),
          std::to_string(failing_codes.size()) + " failures");
    }
    if (top >= 8) {
      const Analyzed& a = chambers(8);
      long lp_failures = 0;
      long a_min_failures = 0;
      long witnesses_checked = 0;
      bool witnesses_ok = true;
      for (const auto& r : a.records) {
        if (!r.realizable) continue;
        if (!r.toric) ++lp_failures;
        const auto& v = *r.a_min;
        Rational rhs(0);
        for (int i = 0; i < 3; ++i) rhs += v(i);
        if (v(7) < rhs) {
          ++a_min_failures;
          if (r.toric) {
            ++witnesses_checked;
            const auto& w = *r.toric_witness;
            Rational wr(0);
            for (int i = 0; i < 3; ++i) wr += w(i);
            const auto code = chamber_of_point(w);
            bool positive = true;
            for (Eigen::Index i = 0; i < w.size(); ++i) positive = positive && w(i).is_integer() && w(i).sign() > 0;
            if (!positive || !(w(7) >= wr) || !code || !(*code == r.code)) witnesses_ok = false;
          }
        }
      }
      std::optional<std::string> confirmation;
      if (a_min_failures == golden::kToricFailures8 && witnesses_ok) {
        confirmation = "testing a_min alone gives " + std::to_string(a_min_failures) + "; for " +
                       std::to_string(witnesses_checked) +
                       " of those chambers another positive integral point satisfies the inequality (each re-checked)";
      }
      add(6, "m = 8 toric failures", lp_failures == golden::kToricFailures8,
          std::to_string(lp_failures) + " (expected " + std::to_string(golden::kToricFailures8) + ")", confirmation);
    }
    if (options_.long_run) {
      const Analyzed& a = chambers(9);
      const long failures = std::count_if(a.records.begin(), a.records.end(),
                                          [](const ChamberRecord& r) { return r.realizable && !r.toric; });
      report_.notes.push_back("m = 9 toric failures: " + std::to_string(failures) + " of " +
                              std::to_string(realizable_count(a)) + " chambers");
    }
  }

  void criterion_invariants(int top) {
    if (top >= 5) {
      std::vector<std::string> bad;
      for (const auto& [code, betti] : golden::kPentagonBetti) {
        const ChamberRecord* r = find(5, code);
        if (!r || !r->invariants || r->invariants->betti != betti) bad.push_back(code);
      }
      add(7, "Betti vectors of the 5-gon chambers", bad.empty(),
          bad.empty() ? "6 rows match; <52> has (1,3,1), so <51> and <521> are the pair sharing b" : join(bad));
      bad.clear();
      for (const auto& [code, value] : golden::kPentagonRCup) {
        const ChamberRecord* r = find(5, code);
        if (!r || !r->invariants || r->invariants->r_cup != value) bad.push_back(code);
      }
      add(7, "r_cup(<52>) = 1 and r_cup(<521>) = 0", bad.empty(), bad.empty() ? "both match" : join(bad));
    }
    if (top >= 6) {
      std::vector<std::string> bad;
      for (const auto& row : golden::kHexagon) {
        const ChamberRecord* r = find(6, row.code);
        if (!r || !r->invariants) {
          bad.push_back(row.code);
          continue;
        }
        const auto& inv = *r->invariants;
        const long b2 = inv.betti.size() > 1 ? inv.betti[1] : 0;
        if (b2 != row.b2 || inv.r_cup != row.r_cup || inv.s != row.s) {
          bad.push_back(row.code + " (" + std::to_string(b2) + "," + std::to_string(inv.r_cup) + "," +
                        std::to_string(inv.s) + ")");
        }
      }
      add(7, "(b, r_cup, s) of all 6-gon chambers", bad.empty(), bad.empty() ? "21 rows match" : join(bad));

      std::vector<ChamberRecord> sorted = chambers(6).records;
      std::stable_sort(sorted.begin(), sorted.end(), [](const ChamberRecord& a, const ChamberRecord& b) {
        return invariant_order(*a.invariants, *b.invariants);
      });
      bool order = sorted.size() == golden::kHexagon.size();
      for (std::size_t i = 0; order && i < sorted.size(); ++i) {
        order = format_code(sorted[i].code) == format_code(parse_code(golden::kHexagon[i].code, 6));
      }
      add(7, "6-gon table order by (b, r_cup, s)", order, order ? "identical" : "differs");
    }
    for (int m = 5; m <= top; ++m) {
      std::vector<LabelledInvariants> items;
      for (const auto& r : chambers(m).records) {
        if (r.realizable && r.invariants) items.push_back({format_code(r.code), *r.invariants});
      }
      const DistinguishReport d = distinguish(items);
      if (m <= 7) {
        add(7, "invariants distinguish the chambers of R^" + std::to_string(m), d.duplicates.empty(),
            std::to_string(d.distinct) + " distinct tuples for " + std::to_string(d.chambers) + " chambers");
      } else {
        std::size_t largest = 0;
        for (const auto& group : d.duplicates) largest = std::max(largest, group.size());
        report_.notes.push_back("m = " + std::to_string(m) + ": " + std::to_string(d.distinct) +
                                " distinct (betti, r_cup, s) tuples for " + std::to_string(d.chambers) + " chambers; " +
                                std::to_string(d.duplicates.size()) + " shared tuples, largest group " +
                                std::to_string(largest));
      }
    }
  }

  void criterion_properties(int top) {
    const int family_top = options_.long_run ? 9 : top;
    {
      progress("cut axioms");
      std::size_t codes = 0;
      std::vector<std::string> bad;
      for (int m = 3; m <= family_top; ++m) {
        std::unordered_set<std::string> seen_families;
        for (const auto& r : chambers(m).records) {
          ++codes;
          const ShortFamily s = short_family_of(r.code);
          const bool ok = is_cut(s) && s.size() == (std::size_t{1} << (m - 1)) &&
                          GeneticCode::chamber(m, genes_of(s)) == r.code;
          if (!ok && bad.size() < 5) bad.push_back(format_code(r.code));
          if (m <= 6) {
            std::string key;
            for (Mask x : s.members()) key += std::to_string(x) + ',';
            if (!seen_families.insert(key).second && bad.size() < 5) bad.push_back("duplicate family " + format_code(r.code));
          }
        }
      }
      add(8, "cut axioms, |S| = 2^(m-1) and gene round trip for every code, m <= " + std::to_string(family_top),
          bad.empty(), bad.empty() ? std::to_string(codes) + " codes" : join(bad));
    }
    {
      std::size_t checked = 0;
      std::vector<std::string> bad;
      std::size_t division_errors = 0;
      for (int m = 3; m <= family_top; ++m) {
        const Analyzed& a = chambers(m);
        division_errors += a.invariant_errors;
        for (const auto& r : a.records) {
          if (!r.invariants) continue;
          ++checked;
          const auto& b = r.invariants->betti;
          if (!std::equal(b.begin(), b.end(), b.rbegin()) && bad.size() < 5) bad.push_back(format_code(r.code));
          if (r.invariants->r_cup > (b.size() > 1 ? b[1] : 0) && bad.size() < 5) {
            bad.push_back(format_code(r.code) + " r_cup > b2");
          }
        }
      }
      add(8, "Poincare duality and r_cup <= b2, m <= " + std::to_string(family_top), bad.empty(),
          bad.empty() ? std::to_string(checked) + " chambers" : join(bad));
      add(8, "exact division by 1 - t^2 and recurrence = direct formula, m <= " + std::to_string(family_top),
          division_errors == 0, std::to_string(division_errors) + " violations");
    }
    {
      progress("ring oracle");
      std::size_t checked = 0;
      std::vector<std::string> bad;
      for (int m = 3; m <= std::min(top, 6); ++m) {
        for (const auto& r : chambers(m).records) {
          const ShortFamily s = short_family_of(r.code);
          const auto dims = ring_oracle(s, m - 3);
          ++checked;
          if (dims != r.invariants->betti) bad.push_back(format_code(r.code));
        }
      }
      add(8, "quotient-ring dimensions over GF(2) = Betti numbers, m <= " + std::to_string(std::min(top, 6)),
          bad.empty(), bad.empty() ? std::to_string(checked) + " chambers" : join(bad));
      checked = 0;
      bad.clear();
      for (int m = 4; m <= std::min(top, 7); ++m) {
        for (const auto& r : chambers(m).records) {
          ++checked;
          if (cup_square_rank(short_family_of(r.code)) != r.invariants->r_cup) bad.push_back(format_code(r.code));
        }
      }
      add(8, "squaring rank in the quotient ring = r_cup formula, 4 <= m <= " + std::to_string(std::min(top, 7)),
          bad.empty(), bad.empty() ? std::to_string(checked) + " chambers" : join(bad));
    }
    {
      progress("s over GF(2) and Q");
      std::size_t checked = 0;
      std::vector<std::string> bad;
      std::vector<std::string> linear_changes;
      for (int m = 3; m <= top; ++m) {
        for (const auto& r : chambers(m).records) {
          const ShortFamily s = short_family_of(r.code);
          const long gf2 = s_alpha(s, {Field::kGF2, true});
          const long q = s_alpha(s, {Field::kRationals, true});
          const long without = s_alpha(s, {Field::kGF2, false});
          ++checked;
          if (gf2 != q && bad.size() < 5) bad.push_back(format_code(r.code));
          if (gf2 != without) linear_changes.push_back(format_code(r.code));
        }
      }
      add(8, "s over GF(2) = s over Q, m <= " + std::to_string(top), bad.empty(),
          bad.empty() ? std::to_string(checked) + " chambers" : join(bad));
      // Where the hexagon reference values see a difference, they side with the full relator set.
      std::optional<std::string> confirmation;
      if (!linear_changes.empty()) {
        std::vector<std::string> sided;
        bool all_sided = true;
        for (const auto& row : golden::kHexagon) {
          const ShortFamily s = short_family_of(parse_code(row.code, 6));
          const long with = s_alpha(s, {Field::kGF2, true});
          const long without = s_alpha(s, {Field::kGF2, false});
          if (with == without) continue;
          all_sided = all_sided && with == row.s;
          sided.push_back(row.code + ": s = " + std::to_string(with) + " with them, " + std::to_string(without) +
                          " without, reference " + std::to_string(row.s));
        }
        if (all_sided && !sided.empty()) confirmation = join(sided, "; ");
      }
      add(8, "degree-1 relators from two-element long sets never change s, m <= " + std::to_string(top),
          linear_changes.empty(),
          linear_changes.empty() ? std::to_string(checked) + " chambers"
                                 : "they change s for " + join(linear_changes),
          confirmation);
    }
    {
      progress("dominance against backtracking search");
      std::size_t pairs = 0;
      long mismatches = 0;
      for (int m = 1; m <= std::min(top, 7); ++m) {
        const Mask n = Mask{1} << m;
        for (Mask a = 0; a < n; ++a) {
          for (Mask b = 0; b < n; ++b) {
            ++pairs;
            if (dominates_mask(a, b, m) != dominates_by_search(a, b, m)) ++mismatches;
          }
        }
      }
      add(8, "dominance = injective-map search, m <= " + std::to_string(std::min(top, 7)), mismatches == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches");
    }
    {
      progress("reduced against full P1");
      std::size_t checked = 0;
      std::vector<std::string> bad;
      for (int m = 3; m <= std::min(top, 6); ++m) {
        for (const auto& r : chambers(m).records) {
          const ShortFamily s = short_family_of(r.code);
          const auto reduced = lex_min_vertex(build_p1(s, P1Rows::kReduced));
          const auto full = lex_min_vertex(build_p1(s, P1Rows::kFull));
          ++checked;
          if (reduced.status != full.status || (reduced.optimal() && reduced.vertex != full.vertex)) {
            bad.push_back(format_code(r.code));
          }
        }
      }
      add(8, "reduced and full P1 agree on status and lex-min vertex, m <= " + std::to_string(std::min(top, 6)),
          bad.empty(), bad.empty() ? std::to_string(checked) + " chambers" : join(bad));
    }
  }

  void criterion_monitors(int top) {
    const int monitor_top = options_.long_run ? 9 : top;
    long chambers_seen = 0;
    long nonintegral = 0;
    long even = 0;
    long non_unique = 0;
    long bad_witness = 0;
    for (int m = 3; m <= monitor_top; ++m) {
      for (const auto& r : chambers(m).records) {
        if (!r.realizable) continue;
        ++chambers_seen;
        const std::string label = format_code(r.code) + " a_min " + format_vector(*r.a_min) + ", l1 " + r.l1->str();
        if (!r.a_min_integral.value_or(true)) {
          ++nonintegral;
          report_.noteworthy.push_back("a_min not integral: " + label);
        } else if (!r.l1_odd.value_or(true)) {
          ++even;
          report_.noteworthy.push_back("even l1: " + label);
        }
        if (!r.unique_optimum.value_or(true)) {
          ++non_unique;
          report_.noteworthy.push_back("l1 optimum not unique: " + label);
        }
        if (!r.plus_witness_ok.value_or(true)) {
          ++bad_witness;
          report_.noteworthy.push_back("min x1 = 1 without an integral odd-sum witness: " + label);
        }
      }
    }
    const std::string range = "m <= " + std::to_string(monitor_top);
    add(9, "monitor: a_min integral with odd l1, " + range, true,
        std::to_string(nonintegral) + " non-integral, " + std::to_string(even) + " even of " +
            std::to_string(chambers_seen) + " chambers");
    add(9, "monitor: unique l1 optimum, " + range, true, std::to_string(non_unique) + " counterexamples");
    add(9, "monitor: in-image witnesses at min x1 = 1, " + range, true, std::to_string(bad_witness) + " flagged");

    progress("vertex integrality of P1");
    long polytopes = 0;
    long nonintegral_polytopes = 0;
    long incomplete = 0;
    for (int m = 3; m <= std::min(top, 8); ++m) {
      for (const auto& r : chambers(m).records) {
        if (!r.realizable) continue;
        ++polytopes;
        const VertexIntegrality v = p1_vertex_integrality(r.code);
        if (!v.complete) ++incomplete;
        if (!v.integral) {
          ++nonintegral_polytopes;
          report_.noteworthy.push_back("P1 has a non-integral vertex: " + format_code(r.code));
        }
      }
    }
    add(9, "monitor: P1 vertices integral, m <= " + std::to_string(std::min(top, 8)), true,
        std::to_string(nonintegral_polytopes) + " with a non-integral vertex, " + std::to_string(incomplete) +
            " enumerations truncated, of " + std::to_string(polytopes));
    if (incomplete > 0) report_.noteworthy.push_back(std::to_string(incomplete) + " vertex enumerations were truncated");
  }

  VerifyOptions options_;
  VerifyReport report_;
  std::map<int, Analyzed> cache_;
};

}  // namespace

bool dominates_by_search(Mask a, Mask b, int m) {
  std::vector<int> elements;
  for (int i = m; i >= 1; --i) {
    if (a & element_bit(i)) elements.push_back(i);
  }
  return injective_search(elements, 0, 0, b, m);
}

std::size_t count_strata_by_lattice(int k, int bound) {
  if (k < 1 || k > 8) throw std::invalid_argument("lattice strata count supports 1 <= k <= 8");
  if (bound < 1) throw std::invalid_argument("lattice bound must be positive");
  return LatticeWalk(k, bound).run();
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const CheckLine& l) { return !l.pass; }));
}

std::size_t VerifyReport::unconfirmed_failures() const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const CheckLine& l) { return !l.pass && !l.confirmation; }));
}

VerifyReport run_verification(const VerifyOptions& options) { return Suite(options).run(); }

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& line : report.lines) {
    out << (line.pass ? "PASS" : "FAIL") << "  [" << line.criterion << "] " << line.item << ": " << line.detail << '\n';
    if (line.confirmation) out << "        independent check agrees with the computed value: " << *line.confirmation << '\n';
  }
  if (!report.notes.empty()) {
    out << "\nnotes:\n";
    for (const auto& n : report.notes) out << "  " << n << '\n';
  }
  out << "\nnoteworthy findings: " << report.noteworthy.size() << '\n';
  for (const auto& n : report.noteworthy) out << "  " << n << '\n';
  const std::size_t failed = report.failures();
  out << "\nsummary: " << report.lines.size() << " checks, " << report.lines.size() - failed << " passed, " << failed
      << " failed (" << report.unconfirmed_failures() << " without independent confirmation)\n";
}

}  // namespace chamberscope
