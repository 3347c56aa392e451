#include "chamberscope/ring_oracle.hpp"

#include <bit>
#include <stdexcept>

namespace chamberscope {

Gf2Echelon::Gf2Echelon(std::size_t columns)
    : columns_(columns), words_((columns + 63) / 64), pivot_row_(columns, -1) {}

bool Gf2Echelon::insert(std::vector<std::uint64_t> row) {
  if (row.size() != words_) throw std::invalid_argument("GF(2) row width mismatch");
  for (std::size_t w = 0; w < words_;) {
    if (row[w] == 0) {
      ++w;
      continue;
    }
    const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    const std::int64_t r = pivot_row_[c];
    if (r < 0) {
      pivot_row_[c] = static_cast<std::int64_t>(rows_.size());
      pivots_.push_back(c);
      rows_.push_back(std::move(row));
      return true;
    }
    // The stored row has its lowest set bit at c, so this only touches columns >= c.
    const auto& pivot = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = w; k < words_; ++k) row[k] ^= pivot[k];
  }
  return false;
}

GradedRelationSystem::GradedRelationSystem(const ShortFamily& family, int degree)
    : m_(family.ground_size()), degree_(degree), echelon_(0) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  const Mask n = Mask{1} << (m_ - 1);
  index_.assign(n, -1);
  for (Mask t = 0; t < n; ++t) {
    if (std::popcount(t) <= degree) {
      index_[t] = static_cast<std::int64_t>(basis_.size());
      basis_.push_back(t);
    }
  }
  echelon_ = Gf2Echelon(basis_.size());

  const Mask top = element_bit(m_);
  // Relators as lists of V-supports; the power of R is implied by the degree.
  struct Relator {
    int degree;
    std::vector<Mask> supports;
  };
  std::vector<Relator> relators;
  for (Mask l = 0; l < n; ++l) {
    const int size = std::popcount(l);
    if (size <= degree && !family.contains(l | top)) relators.push_back({size, {l}});
    if (size >= 1 && size - 1 <= degree && !family.contains(l)) {
      Relator r{size - 1, {}};
      for (Mask s = l;; s = (s - 1) & l) {
        if (family.contains(s | top)) r.supports.push_back(s);
        if (s == 0) break;
      }
      if (!r.supports.empty()) relators.push_back(std::move(r));
    }
  }
  std::vector<Mask> product;
  for (const auto& r : relators) {
    const int free = degree - r.degree;
    for (Mask u = 0; u < n; ++u) {
      if (std::popcount(u) > free) continue;
      product.clear();
      for (Mask s : r.supports) product.push_back(s | u);
      add(product);
    }
  }
}

std::size_t GradedRelationSystem::column(Mask t) const {
  if (t >= index_.size() || index_[t] < 0) throw std::out_of_range("monomial outside degree");
  return static_cast<std::size_t>(index_[t]);
}

bool GradedRelationSystem::add(const std::vector<Mask>& monomials) {
  auto row = echelon_.make_row();
  for (Mask t : monomials) {
    const std::size_t c = column(t);
    row[c / 64] ^= std::uint64_t{1} << (c % 64);
  }
  return echelon_.insert(std::move(row));
}

std::vector<long> ring_oracle(const ShortFamily& family, int max_degree) {
  std::vector<long> dims;
  for (int d = 0; d <= max_degree; ++d) {
    dims.push_back(static_cast<long>(GradedRelationSystem(family, d).cokernel_dimension()));
  }
  return dims;
}

long cup_square_rank(const ShortFamily& family) {
  GradedRelationSystem system(family, 2);
  const std::size_t before = system.rank();
  // Squares of the degree-1 generators: R^2, and V_i^2 = R V_i.
  system.add({Mask{0}});
  for (int i = 1; i < family.ground_size(); ++i) system.add({element_bit(i)});
  return static_cast<long>(system.rank() - before);
}

}  // namespace chamberscope
