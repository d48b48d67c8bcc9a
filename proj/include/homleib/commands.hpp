#pragma once

// The CLI commands as library functions returning reports. Input and
// precondition errors are caught and recorded (exit code 2); theorem
// violations are recorded as failed checks (exit code 1).

#include <cstdint>
#include <string>

#include "homleib/report.hpp"

namespace homleib::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  bool alpha = false;
  std::string name;         // semidirect: name of the product algebra
  std::string algebra_out;  // semidirect, uce: write the constructed algebra
  std::string split_out;    // semidirect: write the canonical split extension
  std::string lift_out;     // lift-aut, lift-der: write the lifted map
};

Report validate(const std::string& file, const Options& opt);
Report uce(const std::string& file, const Options& opt);
Report semidirect(const std::string& action_file, const Options& opt);
Report check_split(const std::string& file, const Options& opt);
Report lift_aut(const std::string& cover_file, const std::string& matrix_file, const Options& opt);
Report lift_der(const std::string& cover_file, const std::string& matrix_file, const Options& opt);
Report check_s5(const std::string& setup_file, const Options& opt);
Report corpus(const Options& opt);

}  // namespace homleib::cli
