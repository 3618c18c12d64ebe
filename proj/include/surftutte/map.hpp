#pragma once

// Oriented combinatorial maps (ribbon graphs) and graphs embedded in them.
//
// Darts are 0-based indices internally; the text formats use 1-based ids.
// sigma rotates counterclockwise around a vertex, alpha pairs the two darts of
// an edge, and faces are the orbits of phi = sigma o alpha, i.e.
// phi(d) = sigma(alpha(d)); phi walks each face clockwise (the face stays on
// the right). The dual map is (phi^-1, alpha) on the same oriented surface:
// edge e of m and edge e* of dual(m) share their dart pair, and dual(dual(m))
// is m relabelled by alpha.
//
// Vertices are numbered by increasing minimal dart, followed by the isolated
// vertices; faces likewise (each isolated vertex carries one face). An edge is
// identified by its smaller dart and oriented from the vertex of that dart.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surftutte {

class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  // Validates sigma (a permutation) and alpha (a fixed-point-free involution).
  CombinatorialMap(std::vector<int> sigma, std::vector<int> alpha, int isolated = 0);

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int isolated_vertices() const { return isolated_; }
  int vertex_count() const { return static_cast<int>(vertex_darts_.size()) + isolated_; }
  int face_count() const { return static_cast<int>(face_darts_.size()) + isolated_; }
  int component_count() const { return component_total_; }

  int sigma(int d) const { return sigma_[static_cast<std::size_t>(d)]; }
  int sigma_inv(int d) const { return sigma_inv_[static_cast<std::size_t>(d)]; }
  int alpha(int d) const { return alpha_[static_cast<std::size_t>(d)]; }
  int phi(int d) const { return sigma(alpha(d)); }
  const std::vector<int>& sigma_perm() const { return sigma_; }
  const std::vector<int>& alpha_perm() const { return alpha_; }

  int vertex_of(int d) const { return vertex_of_[static_cast<std::size_t>(d)]; }
  int face_of(int d) const { return face_of_[static_cast<std::size_t>(d)]; }
  int edge_of(int d) const { return edge_of_[static_cast<std::size_t>(d)]; }
  // Component of a dart-carrying vertex or of an isolated vertex.
  int component_of_vertex(int v) const { return component_of_vertex_[static_cast<std::size_t>(v)]; }
  int component_of_face(int f) const { return component_of_face_[static_cast<std::size_t>(f)]; }

  // Darts of a vertex in counterclockwise order starting at its minimal dart
  // (empty for isolated vertices).
  const std::vector<int>& vertex_darts(int v) const;
  // Darts of a face in phi order starting at its minimal dart.
  const std::vector<int>& face_darts(int f) const;
  // The smaller dart of edge e; the edge is oriented from vertex_of(edge_dart(e)).
  int edge_dart(int e) const { return edge_dart_[static_cast<std::size_t>(e)]; }
  int edge_tail(int e) const { return vertex_of(edge_dart(e)); }
  int edge_head(int e) const { return vertex_of(alpha(edge_dart(e))); }
  bool is_loop(int e) const { return edge_tail(e) == edge_head(e); }
  // +1 when dart d points along the orientation of its edge, -1 otherwise.
  int dart_sign(int d) const { return d < alpha(d) ? 1 : -1; }

  // Genus of every component (isolated vertices give spheres) and their sum.
  std::vector<int> component_genera() const;
  int genus() const;
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
    return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_ && a.isolated_ == b.isolated_;
  }

 private:
  void build();

  std::vector<int> sigma_, sigma_inv_, alpha_;
  int isolated_ = 0;
  std::vector<int> vertex_of_, face_of_, edge_of_, edge_dart_;
  std::vector<std::vector<int>> vertex_darts_, face_darts_;
  std::vector<int> component_of_vertex_, component_of_face_;
  std::vector<int> component_edges_;
  int component_total_ = 0;
};

// A graph G drawn on the surface presented by `host`: a subset of host
// vertices and a subset of host edges whose endpoints are in that vertex set.
// When both subsets are full the graph is the cellulation itself (ribbon mode).
class EmbeddedSubgraph {
 public:
  EmbeddedSubgraph() = default;
  EmbeddedSubgraph(CombinatorialMap host, std::vector<bool> vertices, std::vector<bool> edges);
  static EmbeddedSubgraph whole(CombinatorialMap host);

  const CombinatorialMap& host() const { return host_; }
  bool has_vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  bool has_edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<bool>& vertex_mask() const { return vertices_; }
  const std::vector<bool>& edge_mask() const { return edges_; }
  // Host edge indices of G in increasing order; bit i of a subgraph mask
  // refers to graph_edges()[i].
  std::vector<int> graph_edges() const;
  int graph_vertex_count() const;
  int graph_edge_count() const;
  bool is_cellulation() const;

  friend bool operator==(const EmbeddedSubgraph& a, const EmbeddedSubgraph& b) {
    return a.host_ == b.host_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  CombinatorialMap host_;
  std::vector<bool> vertices_, edges_;
};

// Map-file text (see README for the grammar).
EmbeddedSubgraph parse_map(std::string_view text);
EmbeddedSubgraph load_map_file(const std::string& path);
std::string serialize_map(const EmbeddedSubgraph& s);
std::string serialize_map(const CombinatorialMap& m);
// Cycle notation, 1-based, cycles ordered by minimal element.
std::string cycle_notation(const std::vector<int>& perm);

CombinatorialMap dual(const CombinatorialMap& m);
// Disjoint union; darts of b are shifted past those of a.
CombinatorialMap disjoint_union(const CombinatorialMap& a, const CombinatorialMap& b);
// Splits into connected components (isolated vertices become their own maps).
std::vector<CombinatorialMap> components(const CombinatorialMap& m);

EmbeddedSubgraph delete_edge(const EmbeddedSubgraph& s, int edge);

struct Contraction {
  EmbeddedSubgraph result;
  std::vector<int> dart_map;  // old dart -> new dart, -1 for the two removed darts
};
// Contracts a non-loop edge of G in both G and the host by splicing the two
// vertex rotations; the surface is unchanged.
Contraction contract_edge_tracked(const EmbeddedSubgraph& s, int edge);
EmbeddedSubgraph contract_edge(const EmbeddedSubgraph& s, int edge);

// Isomorphism-invariant byte string over orientation-preserving map
// isomorphisms that respect the marked vertices and edges.
std::string canonical_code(const EmbeddedSubgraph& s);
std::string canonical_code(const CombinatorialMap& m);
std::string to_hex(const std::string& bytes);

}  // namespace surftutte
