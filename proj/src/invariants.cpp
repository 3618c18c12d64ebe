#include "surftutte/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surftutte/error.hpp"

namespace surftutte {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

bool unite(std::vector<int>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a == b) return false;
  parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  return true;
}

}  // namespace

InvariantContext::InvariantContext(EmbeddedSubgraph graph) : graph_(std::move(graph)) {
  const auto& m = host();
  edges_ = graph_.graph_edges();
  if (edges_.size() > 63) throw Error(ErrorCode::TooManyEdges, "subgraph masks are limited to 63 edges");
  genus_ = m.genus();
  euler_ = m.euler_characteristic();

  local_vertex_.assign(static_cast<std::size_t>(m.vertex_count()), -1);
  for (int v = 0; v < m.vertex_count(); ++v)
    if (graph_.has_vertex(v)) local_vertex_[static_cast<std::size_t>(v)] = graph_vertices_++;

  static_face_parent_.resize(static_cast<std::size_t>(m.face_count()));
  std::iota(static_face_parent_.begin(), static_face_parent_.end(), 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    if (graph_.has_edge(e)) continue;
    int d = m.edge_dart(e);
    unite(static_face_parent_, m.face_of(d), m.face_of(m.alpha(d)));
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (graph_.has_vertex(v)) continue;
    const auto& ds = m.vertex_darts(v);
    for (int d : ds) unite(static_face_parent_, m.face_of(ds[0]), m.face_of(d));
  }
  for (auto& p : static_face_parent_) p = find(static_face_parent_, p);
  for (std::size_t f = 0; f < static_face_parent_.size(); ++f)
    if (static_face_parent_[f] == static_cast<int>(f)) ++static_face_roots_;

  graph_components_ = compute((edges_.empty() ? 0 : (~std::uint64_t{0} >> (64 - edges_.size())))).c;
}

InvariantContext::Scratch InvariantContext::make_scratch() const {
  Scratch s;
  s.uf.resize(static_cast<std::size_t>(graph_vertices_));
  s.face_uf.resize(static_face_parent_.size());
  s.sigma_h.resize(static_cast<std::size_t>(host().dart_count()));
  s.in_h.resize(static_cast<std::size_t>(host().dart_count()));
  s.seen.resize(static_cast<std::size_t>(host().dart_count()));
  return s;
}

SubgraphInvariants InvariantContext::compute(std::uint64_t mask) const {
  Scratch s = make_scratch();
  return compute(mask, s);
}

SubgraphInvariants InvariantContext::compute(std::uint64_t mask, Scratch& scratch) const {
  const auto& m = host();
  SubgraphInvariants r;
  r.v = graph_vertices_;

  std::fill(scratch.in_h.begin(), scratch.in_h.end(), 0);
  std::iota(scratch.uf.begin(), scratch.uf.end(), 0);
  scratch.face_uf = static_face_parent_;
  int components = graph_vertices_;
  int faces = static_face_roots_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const int e = edges_[i];
    const int d = m.edge_dart(e);
    if ((mask >> i) & 1U) {
      ++r.e;
      scratch.in_h[static_cast<std::size_t>(d)] = scratch.in_h[static_cast<std::size_t>(m.alpha(d))] = 1;
      if (unite(scratch.uf, local_vertex_[static_cast<std::size_t>(m.edge_tail(e))],
                local_vertex_[static_cast<std::size_t>(m.edge_head(e))]))
        --components;
    } else if (unite(scratch.face_uf, m.face_of(d), m.face_of(m.alpha(d)))) {
      --faces;
    }
  }
  r.c = components;
  r.n = r.e - r.v + r.c;

  // Boundary circles: orbits of sigma_H o alpha on the darts of H, plus one
  // circle per G vertex without H darts.
  int bc = 0;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (local_vertex_[static_cast<std::size_t>(v)] < 0) continue;
    const auto& ds = m.vertex_darts(v);
    int first = -1;
    for (int d : ds)
      if (scratch.in_h[static_cast<std::size_t>(d)]) {
        first = d;
        break;
      }
    if (first < 0) {
      ++bc;
      continue;
    }
    int prev = first;
    int x = m.sigma(first);
    while (true) {
      if (scratch.in_h[static_cast<std::size_t>(x)]) {
        scratch.sigma_h[static_cast<std::size_t>(prev)] = x;
        prev = x;
      }
      if (x == first) break;
      x = m.sigma(x);
    }
  }
  std::fill(scratch.seen.begin(), scratch.seen.end(), 0);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (!scratch.in_h[static_cast<std::size_t>(d)] || scratch.seen[static_cast<std::size_t>(d)]) continue;
    ++bc;
    int x = d;
    do {
      scratch.seen[static_cast<std::size_t>(x)] = 1;
      x = scratch.sigma_h[static_cast<std::size_t>(m.alpha(x))];
    } while (x != d);
  }
  r.bc = bc;
  r.s = 2 * r.c - r.v + r.e - r.bc;

  const int chi_perp = euler_ - (r.v - r.e);
  r.s_perp = 2 * faces - chi_perp - r.bc;
  if (r.s < 0 || r.s_perp < 0 || r.s % 2 != 0 || r.s_perp % 2 != 0)
    throw Error(ErrorCode::InternalEulerParity, "inconsistent neighbourhood genus for mask " + std::to_string(mask));
  r.k = r.n - genus_ + (r.s_perp - r.s) / 2;
  r.l = (2 * genus_ - r.s - r.s_perp) / 2;
  return r;
}

std::uint64_t to_graph_mask(const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges) {
  const auto& m = graph.host();
  if (h_edges.size() != static_cast<std::size_t>(m.edge_count()))
    throw Error(ErrorCode::MalformedInput, "edge mask does not match the host map");
  for (int e = 0; e < m.edge_count(); ++e) {
    if (!h_edges[static_cast<std::size_t>(e)] || graph.has_edge(e)) continue;
    if (!graph.has_vertex(m.edge_tail(e)) || !graph.has_vertex(m.edge_head(e)))
      throw Error(ErrorCode::NotSpanning, "edge " + std::to_string(m.edge_dart(e) + 1) + " leaves the vertex set of G");
    throw Error(ErrorCode::EdgeNotInGraph, "edge " + std::to_string(m.edge_dart(e) + 1));
  }
  const auto edges = graph.graph_edges();
  if (edges.size() > 63) throw Error(ErrorCode::TooManyEdges, "subgraph masks are limited to 63 edges");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (h_edges[static_cast<std::size_t>(edges[i])]) mask |= std::uint64_t{1} << i;
  return mask;
}

std::vector<bool> to_host_mask(const EmbeddedSubgraph& graph, std::uint64_t mask) {
  std::vector<bool> out(static_cast<std::size_t>(graph.host().edge_count()), false);
  const auto edges = graph.graph_edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((mask >> i) & 1U) out[static_cast<std::size_t>(edges[i])] = true;
  return out;
}

SubgraphInvariants invariants(const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges) {
  const auto mask = to_graph_mask(graph, h_edges);
  return InvariantContext(graph).compute(mask);
}

std::vector<bool> dual_subgraph(const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges) {
  if (!graph.is_cellulation()) throw Error(ErrorCode::NotCellulation, "dual subgraphs need the whole cellulation");
  if (h_edges.size() != static_cast<std::size_t>(graph.host().edge_count()))
    throw Error(ErrorCode::MalformedInput, "edge mask does not match the host map");
  std::vector<bool> out(h_edges.size());
  for (std::size_t e = 0; e < h_edges.size(); ++e) out[e] = !h_edges[e];
  return out;
}

}  // namespace surftutte
