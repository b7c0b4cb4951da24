#pragma once

// Check reports: a list of named verdicts with witnesses, rendered as JSON
// (versioned schema) or as text.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace dlab {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
  std::vector<std::string> witnesses;
  // samples whose values were too large to build; neither passed nor failed
  std::size_t skipped = 0;

  /// Records a failing case; only the first few witnesses are kept.
  void fail(std::string witness);
  /// Counts one case, failing with `witness` unless ok.
  void expect(bool ok, const std::string& witness);
  /// As expect, building the witness only on failure.
  template <class F>
  void expect_with(bool ok, F&& witness) {
    if (ok) expect(true, {});
    else expect(false, witness());
  }
};

inline CheckResult make_check(std::string name, std::string detail = {}) {
  return {std::move(name), true, 0, std::move(detail), {}};
}

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  /// Computed values (serialized diagrams, objects) keyed by a short label.
  std::vector<std::pair<std::string, std::string>> outputs;

  bool passed() const;
  CheckResult& add(std::string name, std::string detail = {});
  void merge(const Report& other);
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace dlab
