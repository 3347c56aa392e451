#include "chamberscope/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <string>

#include <json.hpp>

#include "chamberscope/parallel.hpp"

namespace chamberscope {

namespace {

using Words = std::vector<std::uint64_t>;

/// Candidate genes in canonical in-code order plus their pairwise
/// compatibility: conditions (a) and (b) hold for the pair.
struct GeneGraph {
  int m = 0;
  std::vector<Mask> genes;
  std::vector<Words> compatible;
  std::size_t words = 0;
};

std::vector<Mask> singleton_genes(int m) {
  std::vector<Gene> list;
  const Mask top = element_bit(m);
  for (Mask rest = 0; rest < top; ++rest) {
    const Mask a = rest | top;
    if (!dominates_mask(complement_mask(a, m), a, m)) list.push_back({a, GeneMark::kShort});
  }
  std::sort(list.begin(), list.end(), gene_before);
  std::vector<Mask> out;
  out.reserve(list.size());
  for (const auto& g : list) out.push_back(g.mask);
  return out;
}

GeneGraph build_graph(int m) {
  GeneGraph graph;
  graph.m = m;
  graph.genes = singleton_genes(m);
  const std::size_t n = graph.genes.size();
  graph.words = (n + 63) / 64;
  graph.compatible.assign(n, Words(graph.words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const Mask a = graph.genes[i];
    const Mask ca = complement_mask(a, m);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mask b = graph.genes[j];
      const Mask cb = complement_mask(b, m);
      const bool ok = !dominates_mask(a, b, m) && !dominates_mask(b, a, m) &&
                      !dominates_mask(ca, b, m) && !dominates_mask(cb, a, m);
      if (ok) {
        graph.compatible[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        graph.compatible[j][i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
  }
  return graph;
}

/// Depth-first clique search; each code is produced once because genes are
/// appended in increasing candidate index (the appended gene is canonically last).
void extend(const GeneGraph& graph, std::vector<Mask>& stack, const Words& allowed,
            std::vector<GeneticCode>& out) {
  for (std::size_t w = 0; w < allowed.size(); ++w) {
    std::uint64_t word = allowed[w];
    while (word) {
      const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      word &= word - 1;
      stack.push_back(graph.genes[j]);
      std::vector<Gene> genes;
      genes.reserve(stack.size());
      for (Mask g : stack) genes.push_back({g, GeneMark::kShort});
      out.emplace_back(graph.m, std::move(genes));
      Words next(allowed.size(), 0);
      bool any = false;
      for (std::size_t v = w; v < allowed.size(); ++v) {
        std::uint64_t bits = allowed[v] & graph.compatible[j][v];
        if (v == w) bits &= (j & 63) == 63 ? 0 : ~((std::uint64_t{2} << (j & 63)) - 1);
        next[v] = bits;
        any = any || bits != 0;
      }
      if (any) extend(graph, stack, next, out);
      stack.pop_back();
    }
  }
}

std::vector<GeneticCode> codes_from_root(const GeneGraph& graph, std::size_t root) {
  std::vector<GeneticCode> out;
  std::vector<Mask> stack{graph.genes[root]};
  out.push_back(GeneticCode::chamber(graph.m, stack));
  Words allowed = graph.compatible[root];
  for (std::size_t v = 0; v <= root / 64; ++v) {
    if (v < root / 64) {
      allowed[v] = 0;
    } else {
      const std::size_t bit = root & 63;
      allowed[v] &= bit == 63 ? 0 : ~((std::uint64_t{2} << bit) - 1);
    }
  }
  extend(graph, stack, allowed, out);
  return out;
}

struct CheckpointFiles {
  std::filesystem::path state;
  std::filesystem::path partial;
};

CheckpointFiles checkpoint_files(const std::filesystem::path& dir, int m) {
  const std::string stem = "enumerate-m" + std::to_string(m);
  return {dir / (stem + ".state.json"), dir / (stem + ".partial.txt")};
}

struct ResumeState {
  std::size_t next_root = 0;
  std::size_t checkpoints = 0;
  std::vector<GeneticCode> codes;
};

ResumeState load_checkpoint(const CheckpointFiles& files, int m, std::size_t root_count) {
  ResumeState state;
  if (!std::filesystem::exists(files.state)) return state;
  nlohmann::json meta;
  {
    std::ifstream in(files.state);
    if (!in) throw CheckpointError("cannot read " + files.state.string());
    try {
      in >> meta;
    } catch (const nlohmann::json::exception& e) {
      throw CheckpointError("corrupt checkpoint " + files.state.string() + ": " + e.what());
    }
  }
  if (meta.value("m", 0) != m) return state;
  const auto next_root = meta.at("next_root").get<std::size_t>();
  const auto bytes = meta.at("partial_bytes").get<std::uintmax_t>();
  if (next_root > root_count) throw CheckpointError("checkpoint does not match gene graph");
  std::error_code ec;
  const auto have = std::filesystem::file_size(files.partial, ec);
  if (ec || have < bytes) throw CheckpointError("partial output shorter than checkpoint");
  // Lines written after the last checkpoint are discarded.
  std::filesystem::resize_file(files.partial, bytes, ec);
  if (ec) throw CheckpointError("cannot truncate " + files.partial.string());
  std::ifstream in(files.partial);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) state.codes.push_back(parse_code(line, m));
  }
  if (state.codes.size() != meta.at("codes").get<std::size_t>()) {
    throw CheckpointError("checkpoint code count mismatch");
  }
  state.next_root = next_root;
  state.checkpoints = meta.value("checkpoints", std::size_t{0});
  return state;
}

void write_checkpoint(const CheckpointFiles& files, int m, std::size_t next_root,
                      std::size_t codes, std::size_t checkpoints) {
  std::error_code ec;
  const auto bytes = std::filesystem::exists(files.partial) ? std::filesystem::file_size(files.partial, ec)
                                                            : std::uintmax_t{0};
  if (ec) throw CheckpointError("cannot stat " + files.partial.string());
  nlohmann::ordered_json meta;
  meta["m"] = m;
  meta["next_root"] = next_root;
  meta["partial_bytes"] = bytes;
  meta["codes"] = codes;
  meta["checkpoints"] = checkpoints;
  const auto tmp = files.state.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << meta.dump() << '\n';
    if (!out) throw CheckpointError("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, files.state, ec);
  if (ec) throw CheckpointError("cannot replace " + files.state.string());
}

}  // namespace

CodeSet singleton_codes(int m) {
  if (m < 3 || m > kMaxGroundSize) {
    throw std::invalid_argument("m must be in [3, 16], got " + std::to_string(m));
  }
  CodeSet set{m, {}};
  for (Mask g : singleton_genes(m)) set.codes.push_back(GeneticCode::chamber(m, {g}));
  std::sort(set.codes.begin(), set.codes.end(), code_before);
  return set;
}

CodeSet enumerate_codes(int m, const EnumerationOptions& options) {
  if (m < 3 || m > kMaxGroundSize) {
    throw std::invalid_argument("m must be in [3, 16], got " + std::to_string(m));
  }
  const GeneGraph graph = build_graph(m);
  const std::size_t roots = graph.genes.size();

  std::optional<CheckpointFiles> files;
  ResumeState state;
  if (options.checkpoint_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*options.checkpoint_dir, ec);
    if (ec) throw CheckpointError("cannot create " + options.checkpoint_dir->string());
    files = checkpoint_files(*options.checkpoint_dir, m);
    state = load_checkpoint(*files, m, roots);
    if (state.next_root == 0) {
      std::filesystem::remove(files->partial, ec);
      std::ofstream touch(files->partial);
    }
  }

  std::vector<GeneticCode> codes = std::move(state.codes);
  std::size_t since_checkpoint = 0;
  std::size_t checkpoints = state.checkpoints;
  const std::size_t batch = static_cast<std::size_t>(std::max(1, options.jobs));
  for (std::size_t start = state.next_root; start < roots; start += batch) {
    const std::size_t count = std::min(batch, roots - start);
    auto chunks = parallel_map<std::vector<GeneticCode>>(
        count, options.jobs, [&](std::size_t k) { return codes_from_root(graph, start + k); });
    for (auto& chunk : chunks) {
      since_checkpoint += chunk.size();
      if (files) {
        std::ofstream out(files->partial, std::ios::app);
        for (const auto& code : chunk) out << format_code(code) << '\n';
        if (!out) throw CheckpointError("cannot append to " + files->partial.string());
      }
      codes.insert(codes.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    }
    const std::size_t next_root = start + count;
    if (files && since_checkpoint >= options.checkpoint_interval && next_root < roots) {
      write_checkpoint(*files, m, next_root, codes.size(), ++checkpoints);
      since_checkpoint = 0;
      if (options.stop_after_checkpoint && options.stop_after_checkpoint(checkpoints)) {
        throw EnumerationInterrupted("enumeration stopped after checkpoint " +
                                     std::to_string(checkpoints));
      }
    }
  }
  if (files) {
    std::error_code ec;
    std::filesystem::remove(files->state, ec);
    std::filesystem::remove(files->partial, ec);
  }

  codes.emplace_back(m);
  std::sort(codes.begin(), codes.end(), code_before);
  return CodeSet{m, std::move(codes)};
}

}  // namespace chamberscope
