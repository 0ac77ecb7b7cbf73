#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace reslat {

/// One independently evaluated condition of an equivalence battery.
struct Criterion {
  std::string group;
  std::string key;
  bool holds = false;
  std::string witness;  // first counterexample, empty when the condition holds
};

using Battery = std::vector<Criterion>;

inline bool all_hold(const Battery& b) {
  return std::all_of(b.begin(), b.end(), [](const Criterion& c) { return c.holds; });
}

inline bool unanimous(const Battery& b) {
  return std::all_of(b.begin(), b.end(),
                     [&](const Criterion& c) { return c.holds == b.front().holds; });
}

}  // namespace reslat
