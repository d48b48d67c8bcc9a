#include "homleib/report.hpp"

#include <sstream>

namespace homleib {

namespace {

std::string witness_text(const std::vector<Index>& w) {
  std::string out;
  for (Index i : w) out += (out.empty() ? "" : " ") + std::to_string(i);
  return out;
}

}  // namespace

void Report::check(const std::string& prefix, const CheckList& list) {
  for (const auto& c : list) check(prefix.empty() ? c.name : prefix + ": " + c.name, c.result);
}

void Report::error(std::string text) { errors_.push_back(std::move(text)); }

bool Report::passed() const {
  if (!errors_.empty()) return false;
  for (const auto& c : checks_)
    if (!c.result.ok) return false;
  return true;
}

ExitCode Report::exit_code() const {
  if (!errors_.empty()) return ExitCode::input_error;
  return passed() ? ExitCode::pass : ExitCode::check_failure;
}

std::string Report::human() const {
  std::ostringstream os;
  os << "homleib " << command_;
  for (const auto& a : args_) os << " " << a;
  os << "\n";
  for (const auto& e : errors_) os << "error: " << e << "\n";
  if (!facts_.empty()) {
    std::size_t width = 0;
    for (const auto& [name, value] : facts_) width = std::max(width, name.size());
    os << "facts\n";
    for (const auto& [name, value] : facts_)
      os << "  " << name << std::string(width - name.size() + 2, ' ')
         << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  if (!checks_.empty()) {
    os << "checks\n";
    for (const auto& c : checks_) {
      os << "  [" << (c.result.ok ? "pass" : "FAIL") << "] " << c.name;
      if (!c.result.ok) {
        if (!c.result.what.empty()) os << ": " << c.result.what;
        if (!c.result.witness.empty()) os << " (witness " << witness_text(c.result.witness) << ")";
      }
      if (!c.result.detail.empty()) os << " -- " << c.result.detail;
      os << "\n";
    }
  }
  for (const auto& n : notes_) os << "note: " << n << "\n";
  std::size_t ok = 0;
  for (const auto& c : checks_) ok += c.result.ok ? 1 : 0;
  os << "result: " << (passed() ? "PASS" : errors_.empty() ? "FAIL" : "ERROR") << " (" << ok << "/" << checks_.size()
     << " checks)\n";
  return os.str();
}

io::json Report::machine() const {
  io::json out;
  out["command"] = command_;
  out["args"] = args_;
  out["errors"] = errors_;
  io::json facts = io::json::object();
  for (const auto& [name, value] : facts_) facts[name] = value;
  out["facts"] = facts;
  io::json checks = io::json::array();
  for (const auto& c : checks_) {
    io::json j;
    j["name"] = c.name;
    j["ok"] = c.result.ok;
    if (!c.result.what.empty()) j["what"] = c.result.what;
    if (!c.result.witness.empty()) j["witness"] = c.result.witness;
    if (!c.result.detail.empty()) j["detail"] = c.result.detail;
    checks.push_back(std::move(j));
  }
  out["checks"] = checks;
  out["notes"] = notes_;
  out["passed"] = passed();
  out["exit_status"] = static_cast<int>(exit_code());
  return out;
}

std::string Report::render(bool machine_format) const { return machine_format ? io::format(machine()) : human(); }

}  // namespace homleib
