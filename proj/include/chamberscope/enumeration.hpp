#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chamberscope/genetic_code.hpp"

namespace chamberscope {

/// Codes of one type m, deduplicated and sorted by code_before.
struct CodeSet {
  int m = 0;
  std::vector<GeneticCode> codes;
};

/// All one-gene virtual codes <A>: A contains m and its complement does not embed in A.
CodeSet singleton_codes(int m);

class EnumerationInterrupted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  int jobs = 1;
  /// When set, progress is persisted here and a previous run is resumed.
  std::optional<std::filesystem::path> checkpoint_dir;
  std::size_t checkpoint_interval = 100000;
  /// Test hook: called after each checkpoint write with the number written so
  /// far; returning true aborts with EnumerationInterrupted.
  std::function<bool(std::size_t)> stop_after_checkpoint;
};

/// The full set of virtual genetic codes of type m, including <>.
CodeSet enumerate_codes(int m, const EnumerationOptions& options = {});

}  // namespace chamberscope
