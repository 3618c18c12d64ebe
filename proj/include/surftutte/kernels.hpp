#pragma once

// State-sum kernels over all 2^e spanning subgraphs of an InvariantContext.
// Each subgraph is reduced to a small integer key (typically an exponent
// vector) and the kernels return how many subgraphs produced each key.
//
// accumulate_serial is the reference; accumulate_parallel splits the mask
// range over OpenMP threads with per-thread histograms merged at the end.
// Merging is a sum of counts, so the result does not depend on scheduling.

#include <array>
#include <cstdint>
#include <map>

#include <omp.h>

#include "surftutte/invariants.hpp"

namespace surftutte {

using StateKey = std::array<std::int64_t, 4>;
using StateHistogram = std::map<StateKey, std::uint64_t>;

inline std::uint64_t subgraph_count(const InvariantContext& ctx) {
  return std::uint64_t{1} << ctx.edge_count();
}

template <class KeyFn>
StateHistogram accumulate_serial(const InvariantContext& ctx, KeyFn&& key) {
  StateHistogram hist;
  auto scratch = ctx.make_scratch();
  const std::uint64_t total = subgraph_count(ctx);
  for (std::uint64_t mask = 0; mask < total; ++mask) ++hist[key(mask, ctx.compute(mask, scratch))];
  return hist;
}

template <class KeyFn>
StateHistogram accumulate_parallel(const InvariantContext& ctx, KeyFn&& key) {
  const std::uint64_t total = subgraph_count(ctx);
  if (total < 4096) return accumulate_serial(ctx, key);
  StateHistogram hist;
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    StateHistogram local;
    auto scratch = ctx.make_scratch();
#pragma omp for schedule(static, 1024) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto mask = static_cast<std::uint64_t>(i);
      ++local[key(mask, ctx.compute(mask, scratch))];
    }
#pragma omp critical(surftutte_histogram_merge)
    for (const auto& [k, count] : local) hist[k] += count;
  }
  return hist;
}

template <class KeyFn>
StateHistogram accumulate(const InvariantContext& ctx, KeyFn&& key, bool parallel = true) {
  return parallel ? accumulate_parallel(ctx, key) : accumulate_serial(ctx, key);
}

}  // namespace surftutte
