#include "chamberscope/subset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace chamberscope {

void check_ground_size(int m) {
  if (m < 1 || m > kMaxGroundSize) {
    throw InvalidSubset("ground size out of range: " + std::to_string(m));
  }
}

Subset::Subset(Mask mask, int m) : mask_(mask), m_(m) {
  check_ground_size(m);
  if ((mask & ~full_mask(m)) != 0) {
    throw InvalidSubset("subset has elements outside {1.." + std::to_string(m) + "}");
  }
}

Subset Subset::from_elements(const std::vector<int>& elements, int m) {
  check_ground_size(m);
  Mask mask = 0;
  for (int e : elements) {
    if (e < 1 || e > m) {
      throw InvalidSubset("element " + std::to_string(e) + " outside {1.." + std::to_string(m) + "}");
    }
    if (mask & element_bit(e)) {
      throw InvalidSubset("repeated element " + std::to_string(e));
    }
    mask |= element_bit(e);
  }
  return Subset(mask, m);
}

int Subset::size() const noexcept { return std::popcount(mask_); }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int i = m_; i >= 1; --i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool dominates(Subset a, Subset b) {
  if (a.ground_size() != b.ground_size()) {
    throw InvalidSubset("dominates: mismatched ground sizes");
  }
  return dominates_mask(a.mask(), b.mask(), a.ground_size());
}

Subset complement(Subset a) {
  return Subset(complement_mask(a.mask(), a.ground_size()), a.ground_size());
}

std::vector<Mask> upper_covers(Mask a, int m) {
  std::vector<Mask> covers;
  if (!(a & 1U)) covers.push_back(a | 1U);
  for (int x = 1; x < m; ++x) {
    if ((a & element_bit(x)) && !(a & element_bit(x + 1))) {
      covers.push_back((a & ~element_bit(x)) | element_bit(x + 1));
    }
  }
  return covers;
}

std::vector<Mask> lower_covers(Mask a, int m) {
  std::vector<Mask> covers;
  if (a & 1U) covers.push_back(a & ~1U);
  for (int x = 2; x <= m; ++x) {
    if ((a & element_bit(x)) && !(a & element_bit(x - 1))) {
      covers.push_back((a & ~element_bit(x)) | element_bit(x - 1));
    }
  }
  return covers;
}

std::string format_subset(Subset a) {
  const auto elements = a.elements();
  if (a.ground_size() <= 9) {
    std::string out;
    for (int e : elements) out.push_back(static_cast<char>('0' + e));
    return out;
  }
  std::string out = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(elements[k]);
  }
  return out + "}";
}

Subset parse_subset(std::string_view text, int m) {
  check_ground_size(m);
  std::vector<int> elements;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidSubset("unterminated brace subset");
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      const auto comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
          })) {
        throw InvalidSubset("malformed subset element in '" + std::string(text) + "'");
      }
      elements.push_back(std::stoi(std::string(item)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return Subset::from_elements(elements, m);
  }
  if (m > 9) throw InvalidSubset("digit form requires m <= 9; use {a,b,...}");
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw InvalidSubset("malformed subset '" + std::string(text) + "'");
    }
    elements.push_back(c - '0');
  }
  return Subset::from_elements(elements, m);
}

DominanceTable::DominanceTable(int m) : m_(m) {
  if (m < 1 || m > 12) throw InvalidSubset("dominance table supports m <= 12");
  const std::size_t n = std::size_t{1} << m;
  bits_.assign((n * n + 63) / 64, 0);
  for (Mask a = 0; a < n; ++a) {
    for (Mask b = 0; b < n; ++b) {
      if (dominates_mask(a, b, m)) {
        const std::size_t index = (static_cast<std::size_t>(a) << m) | b;
        bits_[index >> 6] |= std::uint64_t{1} << (index & 63);
      }
    }
  }
}

}  // namespace chamberscope
