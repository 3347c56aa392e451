#include "chamberscope/genetic_code.hpp"

#include <algorithm>
#include <bit>

namespace chamberscope {

std::strong_ordering numeric_order(Mask a, Mask b) {
  if (auto c = std::popcount(a) <=> std::popcount(b); c != 0) return c;
  // Same cardinality: the first differing element from the top decides.
  const Mask diff = a ^ b;
  if (diff == 0) return std::strong_ordering::equal;
  const int top = std::bit_width(diff);
  return (a & element_bit(top)) ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool gene_before(const Gene& a, const Gene& b) {
  const int size_a = std::popcount(a.mask);
  const int size_b = std::popcount(b.mask);
  if (size_a != size_b) return size_a > size_b;
  if (auto c = numeric_order(a.mask, b.mask); c != 0) return c < 0;
  return a.mark < b.mark;
}

namespace {

void validate(int m, const std::vector<Gene>& genes) {
  const Mask top = element_bit(m);
  for (std::size_t i = 0; i < genes.size(); ++i) {
    const Gene& g = genes[i];
    if ((g.mask & ~full_mask(m)) != 0) {
      throw InvalidCode("gene has elements outside {1.." + std::to_string(m) + "}");
    }
    if (!(g.mask & top)) {
      throw InvalidCode("gene " + format_subset(Subset(g.mask, m)) + " does not contain " +
                        std::to_string(m));
    }
    for (std::size_t j = 0; j < genes.size(); ++j) {
      const Gene& h = genes[j];
      if (i != j && g.mark == h.mark && dominates_mask(g.mask, h.mask, m)) {
        throw InvalidCode("genes " + format_subset(Subset(g.mask, m)) + " and " +
                          format_subset(Subset(h.mask, m)) + " are comparable");
      }
      if (g.mark == GeneMark::kShort && h.mark == GeneMark::kShort &&
          dominates_mask(complement_mask(g.mask, m), h.mask, m)) {
        throw InvalidCode("complement of " + format_subset(Subset(g.mask, m)) + " embeds in " +
                          format_subset(Subset(h.mask, m)));
      }
    }
  }
}

}  // namespace

GeneticCode::GeneticCode(int m, std::vector<Gene> genes) : m_(m), genes_(std::move(genes)) {
  check_ground_size(m);
  std::sort(genes_.begin(), genes_.end(), gene_before);
  validate(m_, genes_);
}

GeneticCode GeneticCode::chamber(int m, const std::vector<Mask>& genes) {
  std::vector<Gene> list;
  list.reserve(genes.size());
  for (Mask g : genes) list.push_back({g, GeneMark::kShort});
  return GeneticCode(m, std::move(list));
}

bool GeneticCode::is_chamber_type() const noexcept {
  return std::all_of(genes_.begin(), genes_.end(),
                     [](const Gene& g) { return g.mark == GeneMark::kShort; });
}

std::vector<Mask> GeneticCode::short_genes() const {
  std::vector<Mask> out;
  for (const auto& g : genes_) {
    if (g.mark == GeneMark::kShort) out.push_back(g.mask);
  }
  return out;
}

std::vector<Mask> GeneticCode::almost_short_genes() const {
  std::vector<Mask> out;
  for (const auto& g : genes_) {
    if (g.mark == GeneMark::kAlmostShort) out.push_back(g.mask);
  }
  return out;
}

bool is_virtual_code(const std::vector<Mask>& genes, int m) {
  const Mask top = element_bit(m);
  for (std::size_t i = 0; i < genes.size(); ++i) {
    if (!(genes[i] & top)) return false;
    for (std::size_t j = 0; j < genes.size(); ++j) {
      if (i != j && dominates_mask(genes[i], genes[j], m)) return false;
      if (dominates_mask(complement_mask(genes[i], m), genes[j], m)) return false;
    }
  }
  return true;
}

bool code_before(const GeneticCode& a, const GeneticCode& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Gene& x = a.genes()[k];
    const Gene& y = b.genes()[k];
    if (auto c = numeric_order(x.mask, y.mask); c != 0) return c < 0;
    if (x.mark != y.mark) return x.mark < y.mark;
  }
  return false;
}

std::string format_code(const GeneticCode& code) {
  std::string out = "<";
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (k) out += ',';
    const Gene& g = code.genes()[k];
    out += format_subset(Subset(g.mask, code.ground_size()));
    if (g.mark == GeneMark::kAlmostShort) out += '=';
  }
  return out + ">";
}

GeneticCode parse_code(std::string_view text, int m) {
  check_ground_size(m);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
    throw InvalidCode("malformed code '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Gene> genes;
  while (!body.empty()) {
    // Commas inside braces belong to the gene.
    std::size_t end = 0;
    int depth = 0;
    for (; end < body.size(); ++end) {
      if (body[end] == '{') ++depth;
      if (body[end] == '}') --depth;
      if (body[end] == ',' && depth == 0) break;
    }
    std::string_view item = body.substr(0, end);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    GeneMark mark = GeneMark::kShort;
    if (item.ends_with("^=")) {
      mark = GeneMark::kAlmostShort;
      item.remove_suffix(2);
    } else if (item.ends_with("=")) {
      mark = GeneMark::kAlmostShort;
      item.remove_suffix(1);
    }
    if (item.empty()) throw InvalidCode("empty gene in '" + std::string(text) + "'");
    try {
      genes.push_back({parse_subset(item, m).mask(), mark});
    } catch (const InvalidSubset& e) {
      throw InvalidCode(e.what());
    }
    if (end == body.size()) break;
    body.remove_prefix(end + 1);
    if (body.empty()) throw InvalidCode("trailing comma in '" + std::string(text) + "'");
  }
  for (std::size_t i = 0; i < genes.size(); ++i) {
    for (std::size_t j = i + 1; j < genes.size(); ++j) {
      if (genes[i].mask == genes[j].mask) throw InvalidCode("repeated gene");
    }
  }
  return GeneticCode(m, std::move(genes));
}

}  // namespace chamberscope
