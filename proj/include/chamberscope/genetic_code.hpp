#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chamberscope/subset.hpp"

namespace chamberscope {

class InvalidCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GeneMark { kShort, kAlmostShort };

struct Gene {
  Mask mask = 0;
  GeneMark mark = GeneMark::kShort;

  friend bool operator==(const Gene&, const Gene&) = default;
};

/// Orders masks by the numeric value of their decreasing digit string:
/// fewer elements first, then lexicographically on the decreasing sequence.
std::strong_ordering numeric_order(Mask a, Mask b);

/// Order of genes inside a code: larger genes first, then by numeric value.
bool gene_before(const Gene& a, const Gene& b);

/// A set of genes (subsets containing m), kept in canonical order.
/// Chamber codes carry only short genes; stratum codes may mark genes almost short.
class GeneticCode {
 public:
  GeneticCode() = default;
  explicit GeneticCode(int m) : m_(m) { check_ground_size(m); }

  /// Sorts the genes canonically and validates them; throws InvalidCode.
  GeneticCode(int m, std::vector<Gene> genes);

  static GeneticCode chamber(int m, const std::vector<Mask>& genes);

  int ground_size() const noexcept { return m_; }
  const std::vector<Gene>& genes() const noexcept { return genes_; }
  std::size_t size() const noexcept { return genes_.size(); }
  bool empty() const noexcept { return genes_.empty(); }

  bool is_chamber_type() const noexcept;

  std::vector<Mask> short_genes() const;
  std::vector<Mask> almost_short_genes() const;

  friend bool operator==(const GeneticCode&, const GeneticCode&) = default;

 private:
  int m_ = 0;
  std::vector<Gene> genes_;
};

/// Checks conditions (a) and (b) for a set of short genes.
bool is_virtual_code(const std::vector<Mask>& genes, int m);

/// Total order used for code listings: gene count, then genes compared
/// pairwise by numeric value (short before almost-short on ties).
bool code_before(const GeneticCode& a, const GeneticCode& b);

std::string format_code(const GeneticCode& code);

/// Parses "<>", "<53>", "<621,63>", "<41=>" (also "<41^=>"); genes may use
/// the brace form "{10,3}".
GeneticCode parse_code(std::string_view text, int m);

}  // namespace chamberscope
