#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chamberscope/genetic_code.hpp"
#include "chamberscope/realization.hpp"

namespace chamberscope {

class RecordFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"m":9,"code":"<9642>","genes":[[9,6,4,2]]}; almost-short genes add "marks":["short"|"almost_short", ...].
std::string code_to_json(const GeneticCode& code);

/// Accepts a code record, any object with "m" and "code", or a bare code
/// string such as <621,63>. Blank lines and lines starting with '#' are skipped
/// by read_codes, not here.
GeneticCode code_from_json(std::string_view line, int m);

std::vector<GeneticCode> read_codes(std::istream& in, int m);

/// One JSONL line per chamber. Rationals are written as JSON integers when
/// integral, otherwise as "p/q" strings.
std::string chamber_to_json(const ChamberRecord& record);
ChamberRecord chamber_from_json(std::string_view line);
std::vector<ChamberRecord> read_chambers(std::istream& in);

std::string stratum_to_json(const StratumRecord& record);

struct RunManifest {
  std::string command;
  int m = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  int jobs = 1;
  std::size_t checkpoint_interval = 0;
  /// FNV-1a 64 over the concatenated output bytes, as "fnv1a64:<16 hex digits>".
  std::string content_hash;
};

std::string manifest_to_json(const RunManifest& manifest);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hash_label(std::uint64_t hash);

enum class TableFormat { kCsv, kMarkdown };

/// Invariant table sorted by (betti, r_cup, s); records need invariants.
std::string render_table(std::vector<ChamberRecord> records, TableFormat format);

std::string format_vector(const Vec<Rational>& v);
std::string format_longs(const std::vector<long>& v);

}  // namespace chamberscope
