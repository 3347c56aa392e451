#include <doctest.h>

#include <random>

#include "chamberscope/lp.hpp"
#include "chamberscope/rational.hpp"
#include "chamberscope/realization.hpp"
#include "helpers.hpp"

using namespace chamberscope;
using test::vec;

namespace {

/// Feasibility of {x : A x >= b} by Fourier-Motzkin elimination.
bool fourier_motzkin_feasible(std::vector<std::pair<std::vector<Rational>, Rational>> rows, int n) {
  for (int v = n - 1; v >= 0; --v) {
    std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg, next;
    for (auto& r : rows) {
      const int s = r.first[static_cast<std::size_t>(v)].sign();
      (s > 0 ? pos : s < 0 ? neg : next).push_back(r);
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Rational a = p.first[static_cast<std::size_t>(v)];
        const Rational b = -q.first[static_cast<std::size_t>(v)];
        std::vector<Rational> coeffs(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = p.first[i] * b + q.first[i] * a;
        next.push_back({coeffs, p.second * b + q.second * a});
      }
    }
    rows = std::move(next);
  }
  for (const auto& r : rows) {
    if (Rational(0) < r.second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  // Products beyond 64 bits switch to GMP and come back when small again.
  Rational big(std::int64_t{1} << 62);
  big *= Rational(std::int64_t{1} << 62);
  CHECK_FALSE(big.is_small());
  CHECK(big.str() == "21267647932558653966460912964485513216");
  big /= Rational(std::int64_t{1} << 62);
  CHECK(big == Rational(std::int64_t{1} << 62));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(3, 5));
}

TEST_CASE("one-variable minimum") {
  LpProblem<Rational> p(1);
  p.set_objective(vec({1}));
  p.add_ge(vec({1}), Rational(5));
  const auto out = solve(p);
  REQUIRE(out.optimal());
  CHECK(out.vertex(0) == Rational(5));
  CHECK(out.value == Rational(5));
}

TEST_CASE("free variables and unboundedness") {
  LpProblem<Rational> p(1);
  p.set_objective(vec({-1}));
  p.add_ge(vec({-1}), Rational(-3));
  const auto bounded = solve(p);
  REQUIRE(bounded.optimal());
  CHECK(bounded.vertex(0) == Rational(3));

  LpProblem<Rational> q(1);
  q.set_objective(vec({1}));
  q.add_ge(vec({-1}), Rational(-3));
  CHECK(solve(q).status == LpStatus::kUnbounded);
}

TEST_CASE("P1 of <3> and <9642>") {
  const auto p = build_p1(parse_code("<3>", 3));
  const auto out = solve(p);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(3));
  CHECK(out.vertex == vec({1, 1, 1}));
  CHECK(solve(build_p1(parse_code("<9642>", 9))).status == LpStatus::kInfeasible);
}

TEST_CASE("lexicographic minimum on a flat face") {
  // Square [1,2]^2 with a constant objective: every corner is optimal.
  LpProblem<Rational> p(2);
  p.set_all_nonnegative();
  p.set_objective(vec({0, 0}));
  p.add_ge(vec({1, 0}), Rational(1));
  p.add_le(vec({1, 0}), Rational(2));
  p.add_ge(vec({0, 1}), Rational(1));
  p.add_le(vec({0, 1}), Rational(2));
  const auto out = lex_min_vertex(p);
  REQUIRE(out.optimal());
  CHECK(out.vertex == vec({1, 1}));
  CHECK(out.single_vertex_optimum == false);

  // Minimizing y alone leaves the edge y = 1; the lex order picks x = 1.
  p.set_objective(vec({0, 1}));
  const auto edge = lex_min_vertex(p);
  CHECK(edge.vertex == vec({1, 1}));
  CHECK(edge.single_vertex_optimum == false);

  p.set_objective(vec({1, 1}));
  CHECK(lex_min_vertex(p).single_vertex_optimum == true);
}

TEST_CASE("scaling rows and objective") {
  const auto base = build_p1(parse_code("<621,63>", 6));
  const auto reference = lex_min_vertex(base);
  REQUIRE(reference.optimal());
  LpProblem<Rational> scaled = base;
  scaled.set_objective(base.objective() * Rational(7));
  for (std::size_t row = 0; row < base.constraints().size(); ++row) scaled.scale_row(row, Rational(3 + static_cast<int>(row), 2));
  const auto out = lex_min_vertex(scaled);
  REQUIRE(out.optimal());
  CHECK(out.vertex == reference.vertex);
  CHECK(out.value == reference.value * Rational(7));
}

TEST_CASE("feasibility agrees with Fourier-Motzkin on random systems") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 2;
    const int rows = 3 + trial % 4;
    LpProblem<Rational> p(n);
    p.set_objective(Vec<Rational>::Zero(n));
    std::vector<std::pair<std::vector<Rational>, Rational>> system;
    for (int r = 0; r < rows; ++r) {
      Vec<Rational> a(n);
      std::vector<Rational> as(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) as[static_cast<std::size_t>(i)] = a(i) = Rational(coeff(rng));
      const Rational b(coeff(rng));
      p.add_ge(a, b);
      system.push_back({as, b});
    }
    const auto out = solve(p);
    const bool lp = out.status != LpStatus::kInfeasible;
    REQUIRE_MESSAGE(lp == fourier_motzkin_feasible(system, n), "trial " << trial);
    if (out.optimal()) CHECK(satisfies(p, out.vertex));
    (lp ? feasible : infeasible)++;
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 50);
}

TEST_CASE("vertex enumeration of a square and a triangle") {
  LpProblem<Rational> p(2);
  p.set_all_nonnegative();
  p.set_objective(vec({1, 1}));
  p.add_le(vec({1, 0}), Rational(1));
  p.add_le(vec({0, 1}), Rational(1));
  CHECK(enumerate_vertices(p).size() == 4);
  p.add_le(vec({1, 1}), Rational(1));
  VertexEnumeration stats;
  const auto triangle = enumerate_vertices(p, &stats);
  CHECK(triangle.size() == 3);
  CHECK(stats.complete);
}
