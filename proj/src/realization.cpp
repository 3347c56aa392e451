#include "chamberscope/realization.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <numeric>

#include "chamberscope/enumeration.hpp"
#include "chamberscope/parallel.hpp"

namespace chamberscope {

namespace {

constexpr int kMaxTableSize = 10;

void require_chamber_type(const GeneticCode& code) {
  if (!code.is_chamber_type()) throw InvalidCode("operation needs a code without almost-short genes");
}

Vec<Rational> unit(int n, int i, long value = 1) {
  Vec<Rational> e = Vec<Rational>::Constant(n, Rational(0));
  e(i) = Rational(value);
  return e;
}

Rational sum(const Vec<Rational>& v) {
  Rational total(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) total += v(i);
  return total;
}

bool integral(const Vec<Rational>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_integer()) return false;
  }
  return true;
}

/// Multiplies v by the lcm of its denominators.
Vec<Rational> clear_denominators(const Vec<Rational>& v) {
  mpz_class l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class d = v(i).denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  if (l == 1) return v;
  const Rational factor{mpq_class(l)};
  Vec<Rational> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * factor;
  return out;
}

/// Homogeneous toric row x_m - (x_1 + ... + x_{m-5}) >= 0.
Vec<Rational> toric_row(int m) {
  Vec<Rational> row = unit(m, m - 1);
  for (int i = 0; i < m - 5; ++i) row(i) = Rational(-1);
  return row;
}

}  // namespace

const DominanceTable* dominance_table(int m) {
  if (m < 1 || m > kMaxTableSize) return nullptr;
  static std::array<std::once_flag, kMaxTableSize + 1> flags;
  static std::array<std::unique_ptr<DominanceTable>, kMaxTableSize + 1> tables;
  const auto slot = static_cast<std::size_t>(m);
  std::call_once(flags[slot], [&] { tables[slot] = std::make_unique<DominanceTable>(m); });
  return tables[slot].get();
}

ShortFamily short_family_of(const GeneticCode& code) {
  require_chamber_type(code);
  if (const DominanceTable* table = dominance_table(code.ground_size())) {
    return reconstruct_short_family(code.short_genes(), *table);
  }
  return reconstruct_short_family(code);
}

LpProblem<Rational> build_p1(const ShortFamily& family, P1Rows rows) {
  const int m = family.ground_size();
  LpProblem<Rational> p(m);
  p.set_all_nonnegative();
  p.set_objective(Vec<Rational>::Constant(m, Rational(1)));
  p.add_ge(unit(m, 0), Rational(0));
  for (int i = 0; i + 1 < m; ++i) {
    Vec<Rational> row = unit(m, i + 1);
    row(i) = Rational(-1);
    p.add_ge(std::move(row), Rational(0));
  }
  const std::vector<Mask> emitted = rows == P1Rows::kReduced ? maximal_members(family) : family.members();
  for (Mask s : emitted) {
    Vec<Rational> row(m);
    for (int i = 0; i < m; ++i) row(i) = Rational((s & element_bit(i + 1)) ? -1 : 1);
    p.add_ge(std::move(row), Rational(1));
  }
  return p;
}

LpProblem<Rational> build_p1(const GeneticCode& code, P1Rows rows) {
  return build_p1(short_family_of(code), rows);
}

std::optional<ShortFamily> short_family_of_point(const Vec<Rational>& a) {
  const int m = static_cast<int>(a.size());
  check_ground_size(m);
  ShortFamily family(m);
  const Rational total = sum(a);
  const Mask n = Mask{1} << m;
  for (Mask s = 0; s < n; ++s) {
    Rational inside(0);
    for (int i = 0; i < m; ++i) {
      if (s & element_bit(i + 1)) inside += a(i);
    }
    const Rational twice = inside + inside;
    if (twice == total) return std::nullopt;
    if (twice < total) family.insert(s);
  }
  return family;
}

ChamberRecord realize(const GeneticCode& code) {
  require_chamber_type(code);
  ChamberRecord record;
  record.m = code.ground_size();
  record.code = code;
  const ShortFamily family = short_family_of(code);
  const auto outcome = lex_min_vertex(build_p1(family));
  if (outcome.status == LpStatus::kUnbounded) throw LpInconsistency("l1 minimization over P1 is unbounded");
  if (!outcome.optimal()) return record;
  record.realizable = true;
  record.a_min = outcome.vertex;
  record.l1 = outcome.value;
  record.unique_optimum = outcome.single_vertex_optimum;
  record.a_min_integral = integral(outcome.vertex);
  if (*record.a_min_integral) {
    record.l1_odd = mpz_odd_p(outcome.value.numerator().get_mpz_t()) != 0;
  }
  const auto back = short_family_of_point(outcome.vertex);
  if (!back || !(*back == family)) {
    throw LpInconsistency("a_min of " + format_code(code) + " does not reproduce its short family");
  }
  return record;
}

Rational min_first_coord(const GeneticCode& code) {
  auto p = build_p1(code);
  p.set_objective(unit(code.ground_size(), 0));
  const auto outcome = solve(p);
  if (!outcome.optimal()) throw NotRealizable(format_code(code) + " is not realizable");
  return outcome.value;
}

PlusImageTest plus_image_test(const GeneticCode& code) {
  PlusImageTest test;
  test.min_x1 = min_first_coord(code);
  test.in_image = test.min_x1 <= Rational(1);
  if (test.min_x1 == Rational(1)) {
    const int m = code.ground_size();
    auto p = build_p1(code);
    p.add_le(unit(m, 0), Rational(1));
    const auto outcome = lex_min_vertex(p);
    if (!outcome.optimal()) throw LpInconsistency("slice x1 = 1 of P1 is empty");
    test.witness = outcome.vertex;
    const bool odd = integral(outcome.vertex) && mpz_odd_p(outcome.value.numerator().get_mpz_t()) != 0;
    test.witness_ok = odd;
  }
  return test;
}

bool in_plus_image(const ChamberRecord& record) {
  if (record.min_x1) return *record.min_x1 <= Rational(1);
  return plus_image_test(record.code).in_image;
}

ToricTest toric_test(const GeneticCode& code) {
  const int m = code.ground_size();
  const ShortFamily family = short_family_of(code);
  auto p = build_p1(family);
  p.add_ge(toric_row(m), Rational(0));
  // Both rows are cones through the origin, so x1 >= 1 only rules out x1 = 0.
  p.add_ge(unit(m, 0), Rational(1));
  const auto outcome = solve(p);
  ToricTest test;
  if (!outcome.optimal()) return test;
  test.holds = true;
  test.witness = clear_denominators(outcome.vertex);
  const auto back = short_family_of_point(*test.witness);
  if (!back || !(*back == family)) throw LpInconsistency("toric witness left the chamber");
  return test;
}

bool toric_criterion(const GeneticCode& code) { return toric_test(code).holds; }

GeneticCode plus_map(const GeneticCode& code) {
  std::vector<Gene> genes;
  genes.reserve(code.size());
  for (const Gene& g : code.genes()) {
    const Mask shifted = g.mask << 1;
    genes.push_back({g.mark == GeneMark::kShort ? (shifted | element_bit(1)) : shifted, GeneMark::kShort});
  }
  return GeneticCode(code.ground_size() + 1, std::move(genes));
}

StratumRecord minus_map(const GeneticCode& code, bool check_image) {
  require_chamber_type(code);
  const int m = code.ground_size();
  if (m < 4) throw InvalidCode("minus map needs m >= 4");
  if (check_image && !plus_image_test(code).in_image) {
    throw NotInPlusImage(format_code(code) + " is not in the image of the plus map");
  }
  std::vector<Gene> genes;
  genes.reserve(code.size());
  bool all_short = true;
  for (const Gene& g : code.genes()) {
    if (g.mask & element_bit(1)) {
      genes.push_back({(g.mask & ~element_bit(1)) >> 1, GeneMark::kShort});
    } else {
      genes.push_back({g.mask >> 1, GeneMark::kAlmostShort});
      all_short = false;
    }
  }
  StratumRecord record;
  record.m = m - 1;
  record.code = GeneticCode(m - 1, std::move(genes));
  record.is_chamber = all_short;
  record.plus_image = plus_map(record.code);
  if (!(record.plus_image == code)) throw LpInconsistency("plus map does not invert the minus map");
  return record;
}

ChamberRecord analyze_chamber(const GeneticCode& code) {
  ChamberRecord record = realize(code);
  if (!record.realizable) return record;
  const Vec<Rational>& a = *record.a_min;
  const int m = record.m;

  // a_min already decides the cheap cases.
  if (a(0).is_zero()) {
    record.min_x1 = Rational(0);
  } else {
    const PlusImageTest image = plus_image_test(code);
    record.min_x1 = image.min_x1;
    record.plus_witness_ok = image.witness_ok;
  }
  record.in_plus_image = *record.min_x1 <= Rational(1);

  // a_min settles the criterion when it already has a positive first
  // coordinate, or when the slack survives lifting a zero to 1/2.
  const int margin = dot(toric_row(m), a).sign();
  const bool x1_in_row = m >= 6;
  if (margin > 0 || (margin == 0 && (a(0).sign() > 0 || !x1_in_row))) {
    Vec<Rational> w = clear_denominators(a);
    if (w(0).is_zero()) {
      w *= Rational(2);
      w(0) = Rational(1);
    }
    record.toric = true;
    record.toric_witness = std::move(w);
  } else {
    const ToricTest toric = toric_test(code);
    record.toric = toric.holds;
    record.toric_witness = toric.witness;
  }
  return record;
}

VertexIntegrality p1_vertex_integrality(const GeneticCode& code) {
  VertexEnumeration stats;
  const auto vertices = enumerate_vertices(build_p1(code), &stats);
  VertexIntegrality out;
  out.complete = stats.complete;
  out.vertices = vertices.size();
  for (const auto& v : vertices) {
    if (!integral(v)) {
      out.integral = false;
      break;
    }
  }
  return out;
}

std::vector<ChamberRecord> enumerate_chambers(int m, const ChamberOptions& options) {
  EnumerationOptions enumeration;
  enumeration.jobs = options.jobs;
  const CodeSet codes = enumerate_codes(m, enumeration);
  return parallel_map<ChamberRecord>(codes.codes.size(), options.jobs,
                                     [&](std::size_t i) { return analyze_chamber(codes.codes[i]); });
}

long count_strata(int k, const ChamberOptions& options) {
  long count = 0;
  for (const auto& record : enumerate_chambers(k + 1, options)) {
    if (record.realizable && record.in_plus_image) ++count;
  }
  return count;
}

}  // namespace chamberscope
