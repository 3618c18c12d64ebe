#include "surftutte/corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace surftutte {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

CombinatorialMap random_map(Rng& rng, int edges) {
  const int n = 2 * edges;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  rng.shuffle(sigma);
  std::vector<int> alpha(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) alpha[static_cast<std::size_t>(d)] = d ^ 1;
  return CombinatorialMap(std::move(sigma), std::move(alpha), edges == 0 ? 1 : 0);
}

EmbeddedSubgraph random_embedded_subgraph(Rng& rng, const CombinatorialMap& host) {
  std::vector<bool> vertices(static_cast<std::size_t>(host.vertex_count()));
  for (std::size_t v = 0; v < vertices.size(); ++v) vertices[v] = rng.below(4) != 0;
  std::vector<bool> edges(static_cast<std::size_t>(host.edge_count()), false);
  for (int e = 0; e < host.edge_count(); ++e)
    if (vertices[static_cast<std::size_t>(host.edge_tail(e))] && vertices[static_cast<std::size_t>(host.edge_head(e))])
      edges[static_cast<std::size_t>(e)] = rng.coin();
  return EmbeddedSubgraph(host, std::move(vertices), std::move(edges));
}

std::vector<CombinatorialMap> random_map_corpus(std::uint64_t seed, int count, int min_edges, int max_edges) {
  Rng rng(seed);
  std::vector<CombinatorialMap> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_map(rng, rng.between(min_edges, max_edges)));
  return out;
}

std::vector<CombinatorialMap> exhaustive_maps(int max_edges) {
  std::vector<CombinatorialMap> out;
  out.emplace_back(std::vector<int>{}, std::vector<int>{}, 1);
  for (int m = 1; m <= max_edges; ++m) {
    const int n = 2 * m;
    std::vector<int> alpha(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) alpha[static_cast<std::size_t>(d)] = d ^ 1;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::set<std::string> seen;
    do {
      CombinatorialMap map(sigma, alpha, 0);
      if (seen.insert(canonical_code(map)).second) out.push_back(std::move(map));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

}  // namespace surftutte
