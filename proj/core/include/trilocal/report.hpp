#pragma once

// Pass/fail reports produced by the verification routines.

#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace trilocal {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Check {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First counterexample, rendered in the element grammar.
  std::string counterexample;

  void fail(std::string witness) {
    if (passed) counterexample = std::move(witness);
    passed = false;
  }
};

struct Report {
  std::string title;
  std::uint64_t seed = kDefaultSeed;
  /// Extra facts (certification level, ring, ...), in insertion order.
  std::vector<std::pair<std::string, std::string>> facts;
  std::deque<Check> checks;  // stable references across add()

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  Check& add(std::string name) {
    Check c;
    c.name = std::move(name);
    checks.push_back(std::move(c));
    return checks.back();
  }
};

}  // namespace trilocal
