#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jetarc::detail {

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
/// fn returns false to stop early.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Laplace expansion along rows; entry(i, j) yields a ring element.
/// Square sizes up to ~6 are intended.
template <class T, class Entry>
T laplace_determinant(std::size_t n, Entry&& entry, const T& zero, const T& one) {
  struct Rec {
    std::size_t n;
    Entry& entry;
    const T& zero;
    const T& one;
    T run(std::size_t row, std::uint64_t used) const {
      if (row == n) return one;
      T acc = zero;
      int sign = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (used & (std::uint64_t{1} << j)) continue;
        T e = entry(row, j);
        T minor = run(row + 1, used | (std::uint64_t{1} << j));
        if (sign > 0)
          acc += e * minor;
        else
          acc -= e * minor;
        sign = -sign;
      }
      return acc;
    }
  };
  return Rec{n, entry, zero, one}.run(0, 0);
}

}  // namespace jetarc::detail
