#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace updown {

/// Ordered vector of positive table sizes, left to right.  The empty
/// composition is a valid state.
using Composition = std::vector<std::int64_t>;

inline std::int64_t totalMass(const Composition& c) {
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

inline bool isValidComposition(const Composition& c) {
  for (auto part : c)
    if (part < 1) return false;
  return true;
}

/// Compact key "3,1,2" used for hashing compositions in test statistics.
inline std::string compositionKey(const Composition& c) {
  if (c.empty()) return "-";
  std::string key;
  key.reserve(c.size() * 2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) key.push_back(',');
    key += std::to_string(c[i]);
  }
  return key;
}

}  // namespace updown
