#include "dlab/report.hpp"

#include <sstream>

namespace dlab {

namespace {
constexpr std::size_t kMaxWitnesses = 5;
}

void CheckResult::fail(std::string witness) {
  passed = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void CheckResult::expect(bool ok, const std::string& witness) {
  ++cases;
  if (!ok) fail(witness);
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

CheckResult& Report::add(std::string name, std::string detail) {
  checks.push_back({std::move(name), true, 0, std::move(detail), {}});
  return checks.back();
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  outputs.insert(outputs.end(), other.outputs.begin(), other.outputs.end());
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["seed"] = seed;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["cases"] = c.cases;
    if (c.skipped) e["skipped"] = c.skipped;
    if (!c.detail.empty()) e["detail"] = c.detail;
    e["witnesses"] = c.witnesses;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["notes"] = notes;
  if (!outputs.empty()) {
    auto out = nlohmann::ordered_json::object();
    for (const auto& [k, v] : outputs) out[k] = v;
    j["outputs"] = out;
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << " (seed " << seed << ")\n";
  for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.cases << " cases";
    if (c.skipped) os << ", " << c.skipped << " skipped as too large";
    os << "]";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    for (const auto& w : c.witnesses) os << "    witness: " << w << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  for (const auto& [k, v] : outputs) os << k << ":\n" << v << (v.empty() || v.back() != '\n' ? "\n" : "");
  os << (passed() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

}  // namespace dlab
