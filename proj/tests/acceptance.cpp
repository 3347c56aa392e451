// One line per acceptance criterion, then the itemized report.
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <string>

#include "chamberscope/verify.hpp"

int main(int argc, char** argv) {
  chamberscope::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) options.long_run = true;
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) options.jobs = std::atoi(argv[++i]);
  }
  const auto report = chamberscope::run_verification(options);

  struct Tally {
    int checks = 0;
    int failed = 0;
    int unconfirmed = 0;
  };
  std::map<int, Tally> tally;
  for (int c = 1; c <= 9; ++c) tally[c];
  for (const auto& line : report.lines) {
    auto& t = tally[line.criterion];
    ++t.checks;
    if (!line.pass) {
      ++t.failed;
      if (!line.confirmation) ++t.unconfirmed;
    }
  }
  for (const auto& [criterion, t] : tally) {
    std::cout << (t.failed == 0 && t.checks > 0 ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << t.checks
              << " checks";
    if (t.failed > 0) {
      std::cout << ", " << t.failed << " failed";
      if (t.unconfirmed == 0) std::cout << " (each confirmed by an independent computation)";
    }
    if (criterion == 9) std::cout << ", " << report.noteworthy.size() << " noteworthy findings";
    std::cout << '\n';
  }
  std::cout << "\n";
  chamberscope::print_report(report, std::cout);
  std::cout << "unconfirmed failures: " << report.unconfirmed_failures() << '\n';
  return report.all_pass() ? 0 : 2;
}
