#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pgames {

/// Non-empty antichains of {0..n-1} as ascending index lists, in
/// lexicographic DFS order. Stops after `cap` + 1 results.
inline std::vector<std::vector<std::uint32_t>> enumerate_antichains(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& incomparable, std::uint64_t cap) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  std::function<void(const std::vector<std::uint32_t>&)> extend = [&](const std::vector<std::uint32_t>& pool) {
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (out.size() > cap) return;
      const std::uint32_t c = pool[k];
      current.push_back(c);
      out.push_back(current);
      std::vector<std::uint32_t> next;
      for (std::size_t m = k + 1; m < pool.size(); ++m)
        if (incomparable(c, pool[m])) next.push_back(pool[m]);
      extend(next);
      current.pop_back();
    }
  };
  std::vector<std::uint32_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
  extend(all);
  return out;
}

/// Every non-empty subset of {0..n-1}, ascending within each subset.
inline std::vector<std::vector<std::uint32_t>> all_subsets(std::size_t n) {
  if (n > 20) throw std::length_error("full subset enumeration needs at most 20 values");
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

/// Largest antichain count whose square still fits in `max_pairs`.
inline std::uint64_t antichain_cap(std::uint64_t max_pairs) {
  return static_cast<std::uint64_t>(std::sqrt(static_cast<double>(max_pairs))) + 1;
}

}  // namespace pgames
