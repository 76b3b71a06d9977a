#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dicolor {

/// Outcome of an exhaustive or sampled check. A suite passes when it records
/// no violations; `counters` carries suite-specific tallies.
struct VerificationReport {
  std::string suite;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::uint64_t> counters;

  bool ok() const { return violations.empty(); }
  void fail(std::string message) { violations.push_back(std::move(message)); }
  void merge(const VerificationReport& other);
};

inline void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& [key, value] : other.counters) counters[key] += value;
}

}  // namespace dicolor
