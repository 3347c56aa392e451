#pragma once

#include <initializer_list>
#include <vector>

#include "chamberscope/genetic_code.hpp"
#include "chamberscope/lp.hpp"
#include "chamberscope/short_family.hpp"

namespace chamberscope::test {

inline Mask mask_of(std::initializer_list<int> elements) {
  Mask out = 0;
  for (int e : elements) out |= element_bit(e);
  return out;
}

inline Vec<Rational> vec(std::initializer_list<long> values) {
  Vec<Rational> out(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long v : values) out(i++) = Rational(static_cast<std::int64_t>(v));
  return out;
}

inline ShortFamily family_of(const char* code, int m) { return reconstruct_short_family(parse_code(code, m)); }

}  // namespace chamberscope::test
