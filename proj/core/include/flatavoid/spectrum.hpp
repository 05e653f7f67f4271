#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatavoid/bigint.hpp"
#include "flatavoid/geometry.hpp"

namespace flatavoid {

// Sizes m such that EVERY m-subset of GF(2)^n meets some k-flat in exactly
// t points, with the exact density |members| / 2^n as a reduced fraction.
struct SpectrumResult {
  int n = 0, k = 0, t = 0;
  std::vector<std::uint32_t> members;  // ascending, values in [0, 2^n]
  BigInt density_num, density_den;

  bool operator==(const SpectrumResult&) const = default;
};

// Exhaustive scan of all 2^(2^n) subsets, grouped by size with a
// short-circuit per size class once a counterexample (an avoider of that
// size) is found. n above 4 is refused; requires 1 <= k <= n and
// 0 <= t <= 2^k. If cache_dir is nonempty, results are read from / written
// to <cache_dir>/spectrum_n<n>_k<k>_t<t>.json (recomputed on any mismatch).
SpectrumResult spectrum_exhaustive(int n, int k, int t,
                                   const std::string& cache_dir = "");

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 26;

enum class SearchOutcome { kFound, kExhausted, kBudgetExceeded };

struct AvoiderSearch {
  SearchOutcome outcome = SearchOutcome::kBudgetExceeded;
  std::optional<PointSet> witness;  // present iff outcome == kFound
  std::uint64_t nodes = 0;          // search-tree decisions explored
};

// Backtracking search for an m-point [k,t]-avoider in GF(2)^n, extending
// the oracle to dimensions where the 2^(2^n) scan is hopeless (n = 5, 6;
// anything beyond n = 14 is refused). Points are decided in increasing
// order; a flat is checked the moment its last point is decided. A found
// witness is re-verified with is_avoider before being returned. Budget
// exhaustion is an outcome, not an error.
AvoiderSearch exists_avoider_of_size(int n, int k, int t, std::uint64_t m,
                                     std::uint64_t node_budget = kDefaultSearchBudget,
                                     std::uint64_t flat_budget = kDefaultFlatBudget);

}  // namespace flatavoid
