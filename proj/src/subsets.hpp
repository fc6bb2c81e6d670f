#pragma once

#include <cstddef>
#include <vector>

namespace reflex::detail {

/// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order
/// until fn returns true. Returns whether some call returned true.
template <class Fn>
bool any_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace reflex::detail
