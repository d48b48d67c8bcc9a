#pragma once

// Command reports: named checks with witnesses, computed facts, and the two
// renderings (human text and JSON) produced from the same data.

#include <string>
#include <vector>

#include "homleib/homalg.hpp"
#include "homleib/io.hpp"

namespace homleib {

enum class ExitCode { pass = 0, check_failure = 1, input_error = 2 };

struct ReportCheck {
  std::string name;
  CheckResult result;
};

class Report {
 public:
  Report(std::string command, std::vector<std::string> args) : command_(std::move(command)), args_(std::move(args)) {}

  void check(std::string name, CheckResult result) { checks_.push_back({std::move(name), std::move(result)}); }
  void check(const std::string& prefix, const CheckList& list);
  void fact(std::string name, io::json value) { facts_.emplace_back(std::move(name), std::move(value)); }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  /// Records a refusal (input or precondition error); forces exit code 2.
  void error(std::string text);

  [[nodiscard]] bool passed() const;
  [[nodiscard]] ExitCode exit_code() const;
  [[nodiscard]] const std::vector<ReportCheck>& checks() const { return checks_; }
  [[nodiscard]] const std::string& command() const { return command_; }

  [[nodiscard]] std::string human() const;
  [[nodiscard]] io::json machine() const;
  [[nodiscard]] std::string render(bool machine_format) const;

 private:
  std::string command_;
  std::vector<std::string> args_;
  std::vector<ReportCheck> checks_;
  std::vector<std::pair<std::string, io::json>> facts_;
  std::vector<std::string> notes_;
  std::vector<std::string> errors_;
};

}  // namespace homleib
