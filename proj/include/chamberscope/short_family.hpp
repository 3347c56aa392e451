#pragma once

#include <cstdint>
#include <vector>

#include "chamberscope/genetic_code.hpp"
#include "chamberscope/subset.hpp"

namespace chamberscope {

/// A family of subsets of {1..m}, stored as a 2^m-bit membership vector.
class ShortFamily {
 public:
  ShortFamily() = default;
  explicit ShortFamily(int m);

  int ground_size() const noexcept { return m_; }
  bool contains(Mask s) const noexcept { return (bits_[s >> 6] >> (s & 63)) & 1U; }
  void insert(Mask s) noexcept { bits_[s >> 6] |= std::uint64_t{1} << (s & 63); }
  void erase(Mask s) noexcept { bits_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }

  std::size_t size() const noexcept;
  std::vector<Mask> members() const;

  /// Members containing m.
  std::vector<Mask> members_with_top() const;

  friend bool operator==(const ShortFamily&, const ShortFamily&) = default;

 private:
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rebuilds S from the short genes of a chamber-type code:
/// I in S iff (m in I and I ↪ some gene) or (m not in I and the complement of I
/// embeds in no gene).
ShortFamily reconstruct_short_family(const GeneticCode& code);
ShortFamily reconstruct_short_family(const std::vector<Mask>& genes, int m);

/// Same recipe with a precomputed dominance table (hot path).
ShortFamily reconstruct_short_family(const std::vector<Mask>& genes, const DominanceTable& table);

/// Cut axioms: I in S iff complement not in S; closed downward under ↪.
bool is_cut(const ShortFamily& family);

/// ↪-maximal members of the family.
std::vector<Mask> maximal_members(const ShortFamily& family);

/// ↪-maximal members among those containing m; these are the genes.
std::vector<Mask> genes_of(const ShortFamily& family);

/// counts[i] = number of sets of cardinality i + 1, for i = 0..m-1.
struct NsVector {
  std::vector<long> counts;

  long operator[](int i) const { return i >= 0 && i < static_cast<int>(counts.size()) ? counts[i] : 0; }
  friend bool operator==(const NsVector&, const NsVector&) = default;
};

NsVector ns_counts(const std::vector<Mask>& sets, int m);

}  // namespace chamberscope
