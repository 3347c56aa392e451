#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chamberscope/enumeration.hpp"
#include "chamberscope/invariants.hpp"
#include "chamberscope/parallel.hpp"
#include "chamberscope/realization.hpp"
#include "chamberscope/records.hpp"
#include "chamberscope/ring_oracle.hpp"
#include "chamberscope/verify.hpp"

namespace fs = std::filesystem;
using namespace chamberscope;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  int m = 0;
  std::string codes;
  std::string in;
  std::string out;
  int jobs = 1;
  std::string format = "csv";
  bool ring_oracle = false;
  bool long_run = false;
  std::string checkpoint_dir;
};

std::optional<fs::path> cache_dir() {
  const char* env = std::getenv("CHAMBERSCOPE_CACHE");
  if (!env || !*env) return std::nullopt;
  return fs::path(env);
}

void require_m(int m, int low, int high) {
  if (m < low || m > high) {
    throw InputError("--m must be in [" + std::to_string(low) + ", " + std::to_string(high) + "], got " +
                     std::to_string(m));
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

/// Writes the payload to --out (or stdout) and, for regular files, a manifest beside it.
void emit(const Flags& flags, const std::string& command, const std::string& payload,
          std::vector<std::string> inputs = {}, std::size_t checkpoint_interval = 0) {
  if (flags.out.empty() || flags.out == "-") {
    std::cout << payload;
    return;
  }
  {
    std::ofstream out(flags.out, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + flags.out);
    out << payload;
  }
  if (!fs::is_regular_file(flags.out)) return;  // e.g. /dev/null
  RunManifest manifest;
  manifest.command = command;
  manifest.m = flags.m;
  manifest.inputs = std::move(inputs);
  manifest.outputs = {flags.out};
  manifest.jobs = flags.jobs;
  manifest.checkpoint_interval = checkpoint_interval;
  manifest.content_hash = hash_label(fnv1a64(payload));
  std::ofstream out(flags.out + ".manifest.json", std::ios::trunc);
  out << manifest_to_json(manifest) << '\n';
}

std::vector<GeneticCode> load_codes(const Flags& flags, std::vector<std::string>& inputs,
                                    std::size_t* checkpoint_interval = nullptr) {
  if (!flags.codes.empty()) {
    auto in = open_input(flags.codes);
    inputs.push_back(flags.codes);
    return read_codes(in, flags.m);
  }
  EnumerationOptions options;
  options.jobs = flags.jobs;
  if (!flags.checkpoint_dir.empty()) {
    options.checkpoint_dir = fs::path(flags.checkpoint_dir);
  } else if (auto cache = cache_dir()) {
    options.checkpoint_dir = *cache / "checkpoints";
  }
  if (checkpoint_interval && options.checkpoint_dir) *checkpoint_interval = options.checkpoint_interval;
  return enumerate_codes(flags.m, options).codes;
}

std::vector<ChamberRecord> analyze(const std::vector<GeneticCode>& codes, int jobs) {
  for (const auto& code : codes) {
    if (!code.is_chamber_type()) throw InputError(format_code(code) + " has almost-short genes; realize needs chamber codes");
  }
  return parallel_map<ChamberRecord>(codes.size(), jobs, [&](std::size_t i) { return analyze_chamber(codes[i]); });
}

// Non-realizable virtual codes still define a cut, so they get invariants too.
void add_invariants(std::vector<ChamberRecord>& records, bool ring) {
  for (auto& r : records) {
    const ShortFamily family = short_family_of(r.code);
    r.invariants = compute_invariants(family);
    if (ring) {
      const auto dims = ring_oracle(family, r.m - 3);
      if (dims != r.invariants->betti) {
        throw Inconsistency("quotient ring of " + format_code(r.code) + " has dimensions " + format_longs(dims) +
                            ", Betti numbers are " + format_longs(r.invariants->betti));
      }
      r.invariants->ring_dimensions = dims;
    }
  }
}

/// Chambers of type m with invariants: --in, then the cache, then a fresh run.
std::vector<ChamberRecord> chambers_with_invariants(const Flags& flags, std::vector<std::string>& inputs) {
  std::vector<ChamberRecord> records;
  std::optional<fs::path> cached;
  if (!flags.in.empty()) {
    auto in = open_input(flags.in);
    inputs.push_back(flags.in);
    records = read_chambers(in);
    for (const auto& r : records) {
      if (r.m != flags.m) throw InputError(flags.in + " holds records of type " + std::to_string(r.m));
    }
  } else if (auto cache = cache_dir(); cache && fs::exists(*cache / ("chambers-m" + std::to_string(flags.m) + ".jsonl"))) {
    cached = *cache / ("chambers-m" + std::to_string(flags.m) + ".jsonl");
    std::ifstream in(*cached);
    records = read_chambers(in);
    inputs.push_back(cached->string());
  } else {
    records = analyze(load_codes(flags, inputs), flags.jobs);
  }
  bool complete = true;
  for (const auto& r : records) complete = complete && r.invariants;
  if (!complete) add_invariants(records, false);
  if (auto cache = cache_dir(); cache && flags.in.empty() && flags.codes.empty() && !cached) {
    fs::create_directories(*cache);
    std::ofstream out(*cache / ("chambers-m" + std::to_string(flags.m) + ".jsonl"));
    for (const auto& r : records) out << chamber_to_json(r) << '\n';
  }
  return records;
}

int cmd_enumerate(const Flags& flags) {
  require_m(flags.m, 3, 9);
  std::vector<std::string> inputs;
  std::size_t interval = 0;
  const auto codes = load_codes(flags, inputs, &interval);
  std::string payload;
  for (const auto& code : codes) payload += code_to_json(code) + '\n';
  emit(flags, "enumerate", payload, inputs, interval);
  return kExitOk;
}

int cmd_realize(const Flags& flags) {
  require_m(flags.m, 3, 9);
  std::vector<std::string> inputs;
  std::size_t interval = 0;
  const auto records = analyze(load_codes(flags, inputs, &interval), flags.jobs);
  std::string payload;
  for (const auto& r : records) payload += chamber_to_json(r) + '\n';
  emit(flags, "realize", payload, inputs, interval);
  return kExitOk;
}

int cmd_invariants(const Flags& flags) {
  require_m(flags.m, 3, 9);
  if (flags.in.empty()) throw InputError("invariants needs --in chambers.jsonl");
  auto in = open_input(flags.in);
  auto records = read_chambers(in);
  for (const auto& r : records) {
    if (r.m != flags.m) throw InputError(flags.in + " holds records of type " + std::to_string(r.m));
  }
  add_invariants(records, flags.ring_oracle);
  std::string payload;
  for (const auto& r : records) payload += chamber_to_json(r) + '\n';
  emit(flags, "invariants", payload, {flags.in});
  return kExitOk;
}

int cmd_strata(const Flags& flags) {
  require_m(flags.m, 4, 9);
  std::vector<std::string> inputs;
  const auto records = analyze(load_codes(flags, inputs), flags.jobs);
  std::string payload;
  long count = 0;
  for (const auto& r : records) {
    if (!r.realizable || !r.in_plus_image) continue;
    ++count;
    payload += stratum_to_json(minus_map(r.code, false)) + '\n';
  }
  std::cout << count << '\n';
  if (!flags.out.empty()) emit(flags, "strata", payload, inputs);
  return kExitOk;
}

int cmd_table(const Flags& flags) {
  require_m(flags.m, 3, 9);
  TableFormat format;
  if (flags.format == "csv") {
    format = TableFormat::kCsv;
  } else if (flags.format == "md" || flags.format == "markdown") {
    format = TableFormat::kMarkdown;
  } else {
    throw InputError("--format must be csv or md");
  }
  std::vector<std::string> inputs;
  auto records = chambers_with_invariants(flags, inputs);
  std::erase_if(records, [](const ChamberRecord& r) { return !r.realizable; });
  emit(flags, "table", render_table(std::move(records), format), inputs);
  return kExitOk;
}

int cmd_verify(const Flags& flags) {
  VerifyOptions options;
  options.jobs = flags.jobs;
  options.progress = &std::cerr;
  if (flags.m == 9) {
    if (!flags.long_run) throw InputError("verify --m 9 needs --long");
    options.max_m = 8;
  } else {
    require_m(flags.m, 3, 8);
    options.max_m = flags.m;
  }
  options.long_run = flags.long_run;
  const VerifyReport report = run_verification(options);
  std::ostringstream text;
  print_report(report, text);
  if (!flags.out.empty()) emit(flags, "verify", text.str());
  std::cout << text.str();
  return report.all_pass() ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chambers, strata and invariants of planar polygon spaces"};
  app.require_subcommand(1);
  Flags flags;

  auto m_option = [&](CLI::App* sub) { sub->add_option("--m", flags.m, "number of edges")->required(); };
  auto jobs_option = [&](CLI::App* sub) {
    sub->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto out_option = [&](CLI::App* sub, const char* what) { sub->add_option("--out", flags.out, what); };

  auto* enumerate = app.add_subcommand("enumerate", "all virtual genetic codes of type m, as JSONL");
  m_option(enumerate);
  jobs_option(enumerate);
  out_option(enumerate, "output file (default stdout)");
  enumerate->add_option("--checkpoint-dir", flags.checkpoint_dir, "resumable progress directory");

  auto* realize_cmd = app.add_subcommand("realize", "exact LP realization of codes, as chamber JSONL");
  m_option(realize_cmd);
  realize_cmd->add_option("--codes", flags.codes, "code file (default: enumerate all)");
  jobs_option(realize_cmd);
  out_option(realize_cmd, "output file (default stdout)");
  realize_cmd->add_option("--checkpoint-dir", flags.checkpoint_dir, "resumable enumeration directory");

  auto* invariants = app.add_subcommand("invariants", "Betti numbers, r_cup and s for chamber records");
  m_option(invariants);
  invariants->add_option("--in", flags.in, "chamber JSONL")->required();
  invariants->add_flag("--ring-oracle", flags.ring_oracle, "cross-check Betti numbers by linear algebra");
  out_option(invariants, "output file (default stdout)");

  auto* strata = app.add_subcommand("strata", "count strata of R^(m-1) through the chambers of R^m");
  m_option(strata);
  strata->add_option("--codes", flags.codes, "restrict to these chamber codes");
  jobs_option(strata);
  out_option(strata, "stratum JSONL file");

  auto* table = app.add_subcommand("table", "invariant table sorted by (b, r_cup, s)");
  m_option(table);
  table->add_option("--format", flags.format, "csv or md");
  table->add_option("--in", flags.in, "chamber JSONL (default: compute or use the cache)");
  jobs_option(table);
  out_option(table, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "acceptance checks with a PASS/FAIL line per item");
  m_option(verify);
  verify->add_flag("--long", flags.long_run, "include the m = 9 checks");
  jobs_option(verify);
  out_option(verify, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*enumerate) return cmd_enumerate(flags);
    if (*realize_cmd) return cmd_realize(flags);
    if (*invariants) return cmd_invariants(flags);
    if (*strata) return cmd_strata(flags);
    if (*table) return cmd_table(flags);
    if (*verify) return cmd_verify(flags);
  } catch (const Inconsistency& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const LpInconsistency& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const CheckpointError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitInput;
}
