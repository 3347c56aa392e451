#pragma once

#include <cstdint>
#include <vector>

#include "chamberscope/short_family.hpp"

namespace chamberscope {

/// Row-echelon accumulator over GF(2). Rows are reduced on insertion, so the
/// stored rows always form a basis of the span seen so far.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t columns);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Returns true when the row was independent of the current span.
  bool insert(std::vector<std::uint64_t> row);

  /// Row with the given columns set.
  std::vector<std::uint64_t> make_row() const { return std::vector<std::uint64_t>(words_, 0); }

 private:
  std::size_t columns_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row index or -1
};

/// Degree-d part of the relation ideal of the presentation
/// GF(2)[R, V_1..V_{m-1}] / I, written in the square-free basis R^{d-|T|} V_T
/// after V_i^2 -> R V_i.
class GradedRelationSystem {
 public:
  GradedRelationSystem(const ShortFamily& family, int degree);

  int ground_size() const noexcept { return m_; }
  int degree() const noexcept { return degree_; }
  std::size_t basis_size() const noexcept { return basis_.size(); }
  std::size_t rank() const noexcept { return echelon_.rank(); }
  std::size_t cokernel_dimension() const noexcept { return basis_.size() - echelon_.rank(); }

  /// Column index of the monomial R^{degree-|t|} V_t (|t| <= degree).
  std::size_t column(Mask t) const;

  /// Adds an element given as a set of basis monomials; true when it was new.
  bool add(const std::vector<Mask>& monomials);

 private:
  int m_;
  int degree_;
  std::vector<Mask> basis_;
  std::vector<std::int64_t> index_;  // mask -> column or -1
  Gf2Echelon echelon_;
};

/// Graded dimensions of the quotient ring for degrees 0..max_degree.
std::vector<long> ring_oracle(const ShortFamily& family, int max_degree);

/// Rank of the squaring map from degree 1 to degree 2 of the quotient ring.
long cup_square_rank(const ShortFamily& family);

}  // namespace chamberscope
