#pragma once

// Per-subgraph invariants of a spanning subgraph H of a graph G drawn on the
// surface presented by a host map. Everything is computed combinatorially:
// union-find for components, boundary walks of the restricted rotation for bc,
// and the Euler characteristic of the complement for s_perp. k and l then
// follow from n = k + g + s/2 - s_perp/2 and s + s_perp + 2l = 2g.

#include <array>
#include <cstdint>
#include <vector>

#include "surftutte/map.hpp"

namespace surftutte {

struct SubgraphInvariants {
  int c = 0;       // components of H
  int v = 0;       // vertices (all of G)
  int e = 0;       // edges of H
  int n = 0;       // nullity e - v + c
  int bc = 0;      // boundary circles of a regular neighbourhood
  int s = 0;       // twice the genus of the neighbourhood
  int s_perp = 0;  // twice the genus of the complement
  int k = 0;
  int l = 0;

  friend bool operator==(const SubgraphInvariants&, const SubgraphInvariants&) = default;
};

// Precomputed data for evaluating many subgraphs of one (host, G) pair.
// Subgraphs are given as bitmasks: bit i selects graph_edges()[i].
class InvariantContext {
 public:
  explicit InvariantContext(EmbeddedSubgraph graph);

  const EmbeddedSubgraph& graph() const { return graph_; }
  const CombinatorialMap& host() const { return graph_.host(); }
  const std::vector<int>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int genus() const { return genus_; }
  int graph_components() const { return graph_components_; }

  // Working storage; one per thread.
  struct Scratch {
    std::vector<int> uf, face_uf, sigma_h;
    std::vector<char> in_h, seen;
  };
  Scratch make_scratch() const;

  SubgraphInvariants compute(std::uint64_t mask, Scratch& scratch) const;
  SubgraphInvariants compute(std::uint64_t mask) const;

 private:
  EmbeddedSubgraph graph_;
  std::vector<int> edges_;
  int genus_ = 0;
  int euler_ = 0;
  int graph_components_ = 0;
  int graph_vertices_ = 0;
  std::vector<int> local_vertex_;        // host vertex -> index among G vertices, or -1
  std::vector<int> static_face_parent_;  // face union-find after the mask-independent unions
  int static_face_roots_ = 0;
};

// Invariants of H given as a host edge mask. H must be a subset of G's edges
// (EdgeNotInGraph) and may not touch vertices outside G (NotSpanning).
SubgraphInvariants invariants(const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges);

// Host edge mask of H* in dual(m): the duals of the edges not in H.
// The graph must be the whole cellulation (NotCellulation otherwise).
std::vector<bool> dual_subgraph(const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges);

// Converts between host edge masks and graph_edges() bitmasks.
std::uint64_t to_graph_mask(const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges);
std::vector<bool> to_host_mask(const EmbeddedSubgraph& graph, std::uint64_t mask);

}  // namespace surftutte
