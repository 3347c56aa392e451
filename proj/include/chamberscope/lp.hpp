#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "chamberscope/rational.hpp"

namespace chamberscope {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct LpConstraint {
  Vec<Scalar> coefficients;
  Scalar rhs;
};

/// minimize objective . x  subject to  coefficients . x >= rhs  for every row.
/// Variables are free unless flagged non-negative.
template <typename Scalar = Rational>
class LpProblem {
 public:
  explicit LpProblem(int n_vars)
      : n_vars_(n_vars), objective_(Vec<Scalar>::Constant(n_vars, Scalar(0))),
        nonnegative_(static_cast<std::size_t>(n_vars), false) {
    if (n_vars < 1) throw std::invalid_argument("LP needs at least one variable");
  }

  int n_vars() const noexcept { return n_vars_; }
  const std::vector<LpConstraint<Scalar>>& constraints() const noexcept { return rows_; }
  const Vec<Scalar>& objective() const noexcept { return objective_; }
  bool nonnegative(int i) const { return nonnegative_[static_cast<std::size_t>(i)]; }

  void set_objective(Vec<Scalar> c) {
    check_width(c);
    objective_ = std::move(c);
  }
  void set_nonnegative(int i, bool flag = true) { nonnegative_.at(static_cast<std::size_t>(i)) = flag; }
  void set_all_nonnegative() { std::fill(nonnegative_.begin(), nonnegative_.end(), true); }

  void add_ge(Vec<Scalar> a, Scalar rhs) {
    check_width(a);
    rows_.push_back({std::move(a), std::move(rhs)});
  }
  /// Stored as (-a) . x >= -rhs.
  void add_le(const Vec<Scalar>& a, const Scalar& rhs) { add_ge(-a, -rhs); }
  void add_eq(const Vec<Scalar>& a, const Scalar& rhs) {
    add_ge(a, rhs);
    add_le(a, rhs);
  }

  /// Multiplies one row and its right-hand side by a positive scalar.
  void scale_row(std::size_t row, const Scalar& factor) {
    if (!(factor > Scalar(0))) throw std::invalid_argument("row scale must be positive");
    rows_.at(row).coefficients *= factor;
    rows_.at(row).rhs *= factor;
  }

 private:
  void check_width(const Vec<Scalar>& v) const {
    if (v.size() != n_vars_) throw std::invalid_argument("LP row width mismatch");
  }

  int n_vars_;
  std::vector<LpConstraint<Scalar>> rows_;
  Vec<Scalar> objective_;
  std::vector<bool> nonnegative_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

template <typename Scalar = Rational>
struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Vec<Scalar> vertex;
  Scalar value;
  /// Set by lex_min_vertex: whether the optimal face was a single point.
  std::optional<bool> single_vertex_optimum;
  /// All reduced costs at the final dictionary were strictly positive.
  bool strictly_dual_nondegenerate = false;
  std::size_t pivots = 0;

  bool optimal() const noexcept { return status == LpStatus::kOptimal; }
};

struct SimplexOptions {
  /// 0 silent, 1 summary, 2 every dictionary.
  int verbosity = 0;
  std::ostream* log = nullptr;
};

class LpInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

/// Dictionary form: basic_i = T(i,0) + sum_j T(i,j) * nonbasic_j for i >= 1,
/// and z = T(0,0) + sum_j T(0,j) * nonbasic_j. All variables are >= 0.
/// Labels 0..n_struct-1 are structural columns, the rest are row slacks.
template <typename Scalar>
class Dictionary {
 public:
  Dictionary(const LpProblem<Scalar>& p, const SimplexOptions& options) : options_(options) {
    const int n = p.n_vars();
    for (int i = 0; i < n; ++i) {
      column_of_var_.push_back(static_cast<int>(struct_sign_.size()));
      struct_var_.push_back(i);
      struct_sign_.push_back(1);
      if (!p.nonnegative(i)) {
        struct_var_.push_back(i);
        struct_sign_.push_back(-1);
      }
    }
    n_struct_ = static_cast<int>(struct_sign_.size());
    const auto rows = static_cast<Eigen::Index>(p.constraints().size());
    table_ = Mat<Scalar>::Constant(rows + 1, n_struct_ + 1, Scalar(0));
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto& row = p.constraints()[static_cast<std::size_t>(r)];
      table_(r + 1, 0) = -row.rhs;
      for (int c = 0; c < n_struct_; ++c) {
        const Scalar& a = row.coefficients(struct_var_[static_cast<std::size_t>(c)]);
        if (!a.is_zero()) table_(r + 1, c + 1) = struct_sign_[static_cast<std::size_t>(c)] > 0 ? a : -a;
      }
      basic_.push_back(n_struct_ + static_cast<int>(r));
    }
    for (int c = 0; c < n_struct_; ++c) nonbasic_.push_back(c);
    costs_ = Vec<Scalar>::Constant(n_struct_ + static_cast<Eigen::Index>(rows), Scalar(0));
    for (int c = 0; c < n_struct_; ++c) {
      const Scalar& v = p.objective()(struct_var_[static_cast<std::size_t>(c)]);
      costs_(c) = struct_sign_[static_cast<std::size_t>(c)] > 0 ? v : -v;
    }
  }

  Eigen::Index rows() const { return table_.rows() - 1; }
  Eigen::Index cols() const { return table_.cols() - 1; }
  std::size_t pivots() const { return pivots_; }

  void load_objective(bool zero) {
    table_.row(0).setConstant(Scalar(0));
    if (zero) return;
    for (Eigen::Index j = 0; j < cols(); ++j) table_(0, j + 1) = costs_(nonbasic_[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < rows(); ++i) {
      const Scalar& c = costs_(basic_[static_cast<std::size_t>(i)]);
      if (!c.is_zero()) table_.row(0) += c * table_.row(i + 1);
    }
  }

  bool dual_feasible() const {
    for (Eigen::Index j = 1; j <= cols(); ++j) {
      if (table_(0, j).sign() < 0) return false;
    }
    return true;
  }

  bool primal_feasible() const {
    for (Eigen::Index i = 1; i <= rows(); ++i) {
      if (table_(i, 0).sign() < 0) return false;
    }
    return true;
  }

  /// Dual simplex with the smallest-label rule; assumes dual feasibility.
  LpStatus run_dual() {
    for (;;) {
      Eigen::Index leave = -1;
      for (Eigen::Index i = 1; i <= rows(); ++i) {
        if (table_(i, 0).sign() < 0 && (leave < 0 || label_row(i) < label_row(leave))) leave = i;
      }
      if (leave < 0) return LpStatus::kOptimal;
      Eigen::Index enter = -1;
      Scalar best;
      for (Eigen::Index j = 1; j <= cols(); ++j) {
        const Scalar& a = table_(leave, j);
        if (a.sign() <= 0) continue;
        Scalar ratio = table_(0, j) / a;
        if (enter < 0 || ratio < best || (ratio == best && label_col(j) < label_col(enter))) {
          enter = j;
          best = std::move(ratio);
        }
      }
      if (enter < 0) return LpStatus::kInfeasible;
      pivot(leave, enter);
    }
  }

  /// Primal simplex with Bland's rule; assumes primal feasibility.
  LpStatus run_primal() {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 1; j <= cols(); ++j) {
        if (table_(0, j).sign() < 0 && (enter < 0 || label_col(j) < label_col(enter))) enter = j;
      }
      if (enter < 0) return LpStatus::kOptimal;
      Eigen::Index leave = -1;
      Scalar best;
      for (Eigen::Index i = 1; i <= rows(); ++i) {
        const Scalar& a = table_(i, enter);
        if (a.sign() >= 0) continue;
        Scalar ratio = table_(i, 0) / (-a);
        if (leave < 0 || ratio < best || (ratio == best && label_row(i) < label_row(leave))) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index j) {
    const Scalar inverse = Scalar(1) / table_(r, j);
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> row = table_.row(r) * (-inverse);
    row(j) = inverse;
    table_.row(r) = row;
    for (Eigen::Index i = 0; i < table_.rows(); ++i) {
      if (i == r) continue;
      Scalar f = table_(i, j);
      if (f.is_zero()) continue;
      table_(i, j) = Scalar(0);
      for (Eigen::Index k = 0; k < table_.cols(); ++k) {
        if (!row(k).is_zero()) table_(i, k) += f * row(k);
      }
    }
    std::swap(basic_[static_cast<std::size_t>(r - 1)], nonbasic_[static_cast<std::size_t>(j - 1)]);
    ++pivots_;
    if (options_.verbosity >= 2 && options_.log) dump(*options_.log);
  }

  /// Values of the original variables at the current basic solution.
  Vec<Scalar> point(int n_vars) const {
    Vec<Scalar> x = Vec<Scalar>::Constant(n_vars, Scalar(0));
    for (Eigen::Index i = 0; i < rows(); ++i) {
      const int label = basic_[static_cast<std::size_t>(i)];
      if (label < n_struct_) {
        const Scalar& v = table_(i + 1, 0);
        if (struct_sign_[static_cast<std::size_t>(label)] > 0) {
          x(struct_var_[static_cast<std::size_t>(label)]) += v;
        } else {
          x(struct_var_[static_cast<std::size_t>(label)]) -= v;
        }
      }
    }
    return x;
  }

  bool strictly_positive_costs() const {
    for (Eigen::Index j = 1; j <= cols(); ++j) {
      if (table_(0, j).sign() <= 0) return false;
    }
    return true;
  }

  std::vector<int> basis_key() const {
    std::vector<int> key = basic_;
    std::sort(key.begin(), key.end());
    return key;
  }

  /// Feasible neighbours: every (row, column) pair that a ratio test could pick.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> feasible_pivots() const {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
    for (Eigen::Index j = 1; j <= cols(); ++j) {
      std::optional<Scalar> best;
      for (Eigen::Index i = 1; i <= rows(); ++i) {
        const Scalar& a = table_(i, j);
        if (a.sign() >= 0) continue;
        Scalar ratio = table_(i, 0) / (-a);
        if (!best || ratio < *best) best = std::move(ratio);
      }
      if (!best) continue;
      for (Eigen::Index i = 1; i <= rows(); ++i) {
        const Scalar& a = table_(i, j);
        if (a.sign() < 0 && table_(i, 0) / (-a) == *best) out.emplace_back(i, j);
      }
    }
    return out;
  }

  void dump(std::ostream& os) const {
    os << "dictionary after " << pivots_ << " pivots\n";
    for (Eigen::Index i = 0; i < table_.rows(); ++i) {
      os << (i == 0 ? std::string("z") : "v" + std::to_string(label_row(i))) << " =";
      for (Eigen::Index j = 0; j < table_.cols(); ++j) {
        os << ' ' << table_(i, j);
        if (j > 0) os << "*v" << label_col(j);
      }
      os << '\n';
    }
  }

 private:
  int label_row(Eigen::Index i) const { return basic_[static_cast<std::size_t>(i - 1)]; }
  int label_col(Eigen::Index j) const { return nonbasic_[static_cast<std::size_t>(j - 1)]; }

  SimplexOptions options_;
  Mat<Scalar> table_;
  Vec<Scalar> costs_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<int> column_of_var_;
  std::vector<int> struct_var_;
  std::vector<int> struct_sign_;
  int n_struct_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace detail

/// True when x satisfies every row of p exactly (and the sign restrictions).
template <typename Scalar>
bool satisfies(const LpProblem<Scalar>& p, const Vec<Scalar>& x) {
  if (x.size() != p.n_vars()) return false;
  for (int i = 0; i < p.n_vars(); ++i) {
    if (p.nonnegative(i) && x(i).sign() < 0) return false;
  }
  for (const auto& row : p.constraints()) {
    Scalar lhs(0);
    for (int i = 0; i < p.n_vars(); ++i) {
      if (!row.coefficients(i).is_zero() && !x(i).is_zero()) lhs += row.coefficients(i) * x(i);
    }
    if (lhs < row.rhs) return false;
  }
  return true;
}

template <typename Scalar>
Scalar dot(const Vec<Scalar>& a, const Vec<Scalar>& b) {
  Scalar out(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!a(i).is_zero() && !b(i).is_zero()) out += a(i) * b(i);
  }
  return out;
}

/// Exact simplex. Dual-feasible starts (non-negative costs on non-negative
/// variables) go straight to the dual simplex; otherwise a zero-cost dual
/// phase finds a feasible basis and the primal simplex finishes. Both phases
/// pick pivots by smallest label, so they terminate and are deterministic.
template <typename Scalar>
LpOutcome<Scalar> solve(const LpProblem<Scalar>& p, const SimplexOptions& options = {}) {
  detail::Dictionary<Scalar> dict(p, options);
  LpOutcome<Scalar> out;
  dict.load_objective(false);
  LpStatus status;
  if (dict.dual_feasible()) {
    status = dict.run_dual();
  } else {
    dict.load_objective(true);
    status = dict.run_dual();
    if (status == LpStatus::kOptimal) {
      dict.load_objective(false);
      status = dict.run_primal();
    }
  }
  out.status = status;
  out.pivots = dict.pivots();
  if (options.verbosity >= 1 && options.log) {
    *options.log << "simplex: " << to_string(status) << " after " << dict.pivots() << " pivots\n";
  }
  if (status != LpStatus::kOptimal) return out;
  out.vertex = dict.point(p.n_vars());
  out.value = dot(p.objective(), out.vertex);
  out.strictly_dual_nondegenerate = dict.strictly_positive_costs();
  if (!satisfies(p, out.vertex)) throw LpInconsistency("simplex returned an infeasible point");
  return out;
}

/// Among the optimal points, the lexicographically smallest (x1, ..., xn),
/// found by pinning the optimum and re-minimizing one coordinate at a time.
/// Also decides whether the optimal face is a single point.
template <typename Scalar>
LpOutcome<Scalar> lex_min_vertex(const LpProblem<Scalar>& p, const SimplexOptions& options = {}) {
  LpOutcome<Scalar> first = solve(p, options);
  if (!first.optimal()) return first;
  if (first.strictly_dual_nondegenerate) {
    first.single_vertex_optimum = true;
    return first;
  }
  const int n = p.n_vars();
  LpProblem<Scalar> face = p;
  face.add_eq(p.objective(), first.value);
  LpProblem<Scalar> pinned = face;
  Vec<Scalar> point = Vec<Scalar>::Constant(n, Scalar(0));
  std::size_t pivots = first.pivots;
  for (int i = 0; i < n; ++i) {
    Vec<Scalar> e = Vec<Scalar>::Constant(n, Scalar(0));
    e(i) = Scalar(1);
    pinned.set_objective(e);
    auto step = solve(pinned, options);
    pivots += step.pivots;
    if (!step.optimal()) throw LpInconsistency("lexicographic refinement lost optimality");
    point(i) = step.vertex(i);
    pinned.add_eq(e, point(i));
  }
  bool single = true;
  for (int i = 0; i < n && single; ++i) {
    Vec<Scalar> e = Vec<Scalar>::Constant(n, Scalar(0));
    e(i) = Scalar(-1);
    face.set_objective(e);
    auto step = solve(face, options);
    pivots += step.pivots;
    if (!step.optimal() || step.vertex(i) != point(i)) single = false;
  }
  LpOutcome<Scalar> out;
  out.status = LpStatus::kOptimal;
  out.vertex = std::move(point);
  out.value = dot(p.objective(), out.vertex);
  out.single_vertex_optimum = single;
  out.pivots = pivots;
  if (out.value != first.value || !satisfies(p, out.vertex)) {
    throw LpInconsistency("lexicographic refinement left the optimal face");
  }
  return out;
}

struct VertexEnumeration {
  bool complete = true;
  std::size_t bases_visited = 0;
};

/// All vertices of {x : rows hold} for a problem whose variables are all
/// non-negative, by breadth-first search over feasible bases. Stops early
/// (complete = false) once `max_bases` bases were visited.
template <typename Scalar>
std::vector<Vec<Scalar>> enumerate_vertices(const LpProblem<Scalar>& p, VertexEnumeration* stats = nullptr,
                                            std::size_t max_bases = 200000) {
  for (int i = 0; i < p.n_vars(); ++i) {
    if (!p.nonnegative(i)) throw std::invalid_argument("vertex enumeration needs non-negative variables");
  }
  LpProblem<Scalar> feas = p;
  feas.set_objective(Vec<Scalar>::Constant(p.n_vars(), Scalar(0)));
  detail::Dictionary<Scalar> start(feas, {});
  start.load_objective(true);
  VertexEnumeration local;
  std::vector<Vec<Scalar>> vertices;
  if (start.run_dual() != LpStatus::kOptimal) {
    if (stats) *stats = local;
    return vertices;
  }
  auto less = [](const Vec<Scalar>& a, const Vec<Scalar>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  std::set<Vec<Scalar>, decltype(less)> seen_vertices(less);
  std::set<std::vector<int>> seen_bases;
  std::vector<detail::Dictionary<Scalar>> frontier{start};
  seen_bases.insert(start.basis_key());
  while (!frontier.empty()) {
    std::vector<detail::Dictionary<Scalar>> next;
    for (auto& dict : frontier) {
      ++local.bases_visited;
      seen_vertices.insert(dict.point(p.n_vars()));
      if (local.bases_visited >= max_bases) {
        local.complete = false;
        break;
      }
      for (auto [r, j] : dict.feasible_pivots()) {
        detail::Dictionary<Scalar> child = dict;
        child.pivot(r, j);
        if (seen_bases.insert(child.basis_key()).second) next.push_back(std::move(child));
      }
    }
    if (!local.complete) break;
    frontier = std::move(next);
  }
  vertices.assign(seen_vertices.begin(), seen_vertices.end());
  if (stats) *stats = local;
  return vertices;
}

}  // namespace chamberscope
