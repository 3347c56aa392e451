#include "chamberscope/short_family.hpp"

#include <bit>

namespace chamberscope {

ShortFamily::ShortFamily(int m) : m_(m) {
  check_ground_size(m);
  bits_.assign(((std::size_t{1} << m) + 63) / 64, 0);
}

std::size_t ShortFamily::size() const noexcept {
  std::size_t total = 0;
  for (auto word : bits_) total += static_cast<std::size_t>(std::popcount(word));
  return total;
}

std::vector<Mask> ShortFamily::members() const {
  std::vector<Mask> out;
  const Mask n = Mask{1} << m_;
  for (Mask s = 0; s < n; ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

std::vector<Mask> ShortFamily::members_with_top() const {
  std::vector<Mask> out;
  const Mask top = element_bit(m_);
  const Mask n = Mask{1} << m_;
  for (Mask s = top; s < n; ++s) {
    if ((s & top) && contains(s)) out.push_back(s);
  }
  return out;
}

namespace {

template <typename Dominates>
ShortFamily reconstruct(const std::vector<Mask>& genes, int m, Dominates&& dom) {
  for (Mask g : genes) {
    if (!(g & element_bit(m))) throw InvalidCode("gene does not contain m");
  }
  ShortFamily family(m);
  const Mask top = element_bit(m);
  const Mask n = Mask{1} << m;
  for (Mask s = 0; s < n; ++s) {
    bool member;
    if (s & top) {
      member = false;
      for (Mask g : genes) {
        if (dom(s, g)) {
          member = true;
          break;
        }
      }
    } else {
      const Mask c = complement_mask(s, m);
      member = true;
      for (Mask g : genes) {
        if (dom(c, g)) {
          member = false;
          break;
        }
      }
    }
    if (member) family.insert(s);
  }
  return family;
}

}  // namespace

ShortFamily reconstruct_short_family(const std::vector<Mask>& genes, int m) {
  check_ground_size(m);
  if (!is_virtual_code(genes, m)) throw InvalidCode("not a virtual genetic code");
  return reconstruct(genes, m, [m](Mask a, Mask b) { return dominates_mask(a, b, m); });
}

ShortFamily reconstruct_short_family(const std::vector<Mask>& genes, const DominanceTable& table) {
  return reconstruct(genes, table.ground_size(), table);
}

ShortFamily reconstruct_short_family(const GeneticCode& code) {
  if (!code.is_chamber_type()) {
    throw InvalidCode("short family reconstruction needs a chamber-type code");
  }
  return reconstruct_short_family(code.short_genes(), code.ground_size());
}

bool is_cut(const ShortFamily& family) {
  const int m = family.ground_size();
  const Mask n = Mask{1} << m;
  for (Mask s = 0; s < n; ++s) {
    const bool in = family.contains(s);
    if (in == family.contains(complement_mask(s, m))) return false;
    if (!in) continue;
    // Every strict relation factors through a chain of covers.
    for (Mask t : lower_covers(s, m)) {
      if (!family.contains(t)) return false;
    }
  }
  return true;
}

std::vector<Mask> maximal_members(const ShortFamily& family) {
  const int m = family.ground_size();
  std::vector<Mask> out;
  for (Mask s : family.members()) {
    bool maximal = true;
    for (Mask c : upper_covers(s, m)) {
      if (family.contains(c)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<Mask> genes_of(const ShortFamily& family) {
  const int m = family.ground_size();
  const Mask top = element_bit(m);
  std::vector<Mask> out;
  for (Mask s : family.members_with_top()) {
    bool maximal = true;
    for (Mask c : upper_covers(s, m)) {
      if ((c & top) && family.contains(c)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

NsVector ns_counts(const std::vector<Mask>& sets, int m) {
  NsVector ns;
  ns.counts.assign(static_cast<std::size_t>(m), 0);
  for (Mask s : sets) {
    const int size = std::popcount(s);
    if (size >= 1) ++ns.counts[static_cast<std::size_t>(size - 1)];
  }
  return ns;
}

}  // namespace chamberscope
