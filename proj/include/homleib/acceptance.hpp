#pragma once

// The acceptance criteria over the shipped corpus, each a list of named
// checks. Shared by the acceptance binary and the `corpus` command.

#include <cstdint>
#include <string>
#include <vector>

#include "homleib/homalg.hpp"

namespace homleib::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  CheckList checks;

  [[nodiscard]] bool passed() const { return !checks.empty() && all_pass(checks); }
};

inline constexpr int kCriteria = 14;

Criterion criterion(int id, std::uint64_t seed);
std::vector<Criterion> run(std::uint64_t seed);

}  // namespace homleib::acceptance
