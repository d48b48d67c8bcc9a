// One line per acceptance criterion; exit status 0 iff all pass.

#include <cstdlib>
#include <iostream>
#include <string>

#include "homleib/acceptance.hpp"
#include "homleib/commands.hpp"

int main(int argc, char** argv) {
  using namespace homleib;
  std::uint64_t seed = cli::kDefaultSeed;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "-v" || arg == "--verbose") {
      verbose = true;
    } else {
      std::cerr << "usage: homleib-acceptance [--seed N] [-v]\n";
      return 2;
    }
  }
  bool all = true;
  for (int id = 1; id <= acceptance::kCriteria; ++id) {
    const acceptance::Criterion c = acceptance::criterion(id, seed);
    std::size_t ok = 0;
    for (const auto& sub : c.checks) ok += sub.result.ok ? 1 : 0;
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << id << ": " << c.title << " (" << ok << "/"
              << c.checks.size() << " checks)\n";
    for (const auto& sub : c.checks)
      if (verbose || !sub.result.ok)
        std::cout << "    [" << (sub.result.ok ? "pass" : "FAIL") << "] " << sub.name
                  << (sub.result.what.empty() ? "" : ": " + sub.result.what) << "\n";
    all = all && c.passed();
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? 0 : 1;
}
