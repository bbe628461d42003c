#pragma once

#include <cstddef>
#include <span>

namespace quatmt {

// Pairwise (cascade) summation. Fixed association order keeps results
// bit-identical no matter how callers chunk their work, and the error grows
// like log(n) instead of n.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  const std::size_t n = v.size();
  if (n == 0) return T{};
  if (n <= 16) {
    T acc = v[0];
    for (std::size_t i = 1; i < n; ++i) acc += v[i];
    return acc;
  }
  const std::size_t half = n / 2;
  T left = pairwise_sum(v.subspan(0, half));
  left += pairwise_sum(v.subspan(half));
  return left;
}

}  // namespace quatmt
