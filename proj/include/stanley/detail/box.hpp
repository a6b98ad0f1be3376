#pragma once

#include <span>
#include <vector>

namespace stanley::detail {

/// Advance e through the box [lower, upper] (componentwise, inclusive) in
/// lexicographic order. Returns false once the box is exhausted.
inline bool next_in_box(std::vector<int>& e, std::span<const int> lower,
                        std::span<const int> upper) {
  for (std::size_t j = e.size(); j-- > 0;) {
    if (e[j] < upper[j]) {
      ++e[j];
      for (std::size_t k = j + 1; k < e.size(); ++k)
        e[k] = lower[k];
      return true;
    }
  }
  return false;
}

inline bool next_in_box(std::vector<int>& e, std::span<const int> upper) {
  for (std::size_t j = e.size(); j-- > 0;) {
    if (e[j] < upper[j]) {
      ++e[j];
      for (std::size_t k = j + 1; k < e.size(); ++k)
        e[k] = 0;
      return true;
    }
  }
  return false;
}

inline bool dominates(std::span<const int> upper, std::span<const int> lower) {
  for (std::size_t j = 0; j < upper.size(); ++j)
    if (upper[j] < lower[j])
      return false;
  return true;
}

}  // namespace stanley::detail
