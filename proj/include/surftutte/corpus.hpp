#pragma once

// Deterministic test corpora. The generator is mt19937_64 with a fixed
// rejection sampler, so a seed yields the same corpus on every platform.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "surftutte/map.hpp"

namespace surftutte {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (engine_() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Uniformly random rotation over 2m darts with alpha = (1 2)(3 4)...
CombinatorialMap random_map(Rng& rng, int edges);
// Random vertex subset of the host and random host edges among those vertices.
EmbeddedSubgraph random_embedded_subgraph(Rng& rng, const CombinatorialMap& host);

// `count` random maps with edge counts drawn from [min_edges, max_edges].
std::vector<CombinatorialMap> random_map_corpus(std::uint64_t seed, int count, int min_edges, int max_edges);
// Every map with at most max_edges edges (and no isolated vertices) up to
// orientation-preserving isomorphism, plus the single isolated vertex.
std::vector<CombinatorialMap> exhaustive_maps(int max_edges);

}  // namespace surftutte
