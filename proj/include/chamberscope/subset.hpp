#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chamberscope {

/// Largest ambient size supported; masks and family indices fit in 32 bits.
inline constexpr int kMaxGroundSize = 16;

using Mask = std::uint32_t;

/// Bit of element `i` (1-based) in a subset mask.
constexpr Mask element_bit(int i) noexcept { return Mask{1} << (i - 1); }

constexpr Mask full_mask(int m) noexcept { return (Mask{1} << m) - 1; }

class InvalidSubset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of the ground set {1, ..., m}.
class Subset {
 public:
  Subset() = default;
  Subset(Mask mask, int m);

  static Subset from_elements(const std::vector<int>& elements, int m);

  Mask mask() const noexcept { return mask_; }
  int ground_size() const noexcept { return m_; }
  int size() const noexcept;
  bool contains(int i) const noexcept { return (mask_ & element_bit(i)) != 0; }
  bool empty() const noexcept { return mask_ == 0; }

  /// Elements in decreasing order.
  std::vector<int> elements() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  Mask mask_ = 0;
  int m_ = 0;
};

void check_ground_size(int m);

/// A ↪ B: there is an injective map phi: A -> B with phi(x) >= x.
/// Equivalent to: the k-th largest element of A is at most the k-th largest
/// of B for every k <= |A|, and |A| <= |B|.
bool dominates(Subset a, Subset b);

/// Mask-level form used on hot paths; both masks are over {1..m}.
constexpr bool dominates_mask(Mask a, Mask b, int m) noexcept {
  int count_a = 0;
  int count_b = 0;
  for (int t = m; t >= 1; --t) {
    count_a += static_cast<int>((a >> (t - 1)) & 1U);
    count_b += static_cast<int>((b >> (t - 1)) & 1U);
    if (count_a > count_b) return false;
  }
  return true;
}

Subset complement(Subset a);

constexpr Mask complement_mask(Mask a, int m) noexcept { return full_mask(m) & ~a; }

/// Upper covers of `a` in the ↪ order: add 1, or move some x to a vacant x+1.
std::vector<Mask> upper_covers(Mask a, int m);

/// Lower covers: drop 1, or move some x > 1 to a vacant x-1.
std::vector<Mask> lower_covers(Mask a, int m);

/// Decreasing digit string ("531") for m <= 9, brace form ("{10,3}") otherwise.
std::string format_subset(Subset a);

/// Accepts the digit form (m <= 9) and the brace form "{9,6,4,2}".
Subset parse_subset(std::string_view text, int m);

/// Precomputed ↪ relation over all subsets of {1..m}; only built for small m.
class DominanceTable {
 public:
  explicit DominanceTable(int m);

  int ground_size() const noexcept { return m_; }
  bool operator()(Mask a, Mask b) const noexcept {
    const std::size_t index = (static_cast<std::size_t>(a) << m_) | b;
    return (bits_[index >> 6] >> (index & 63)) & 1U;
  }

 private:
  int m_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace chamberscope
