#pragma once

// Link diagrams on closed orientable surfaces and their state sums.
//
// A diagram with crossings is a 4-valent map (the base map); each vertex is a
// crossing and alpha joins darts along strands. The base map is a cellulation
// of the surface, so faces are the regions of the diagram. Crossing i is
// vertex i of the base map. Its darts are kept as (d0 d1 d2 d3) in
// counterclockwise order with the over strand on d0, d2 and d0 the smaller of
// the two over darts.
//
// Smoothings: the A-smoothing at a crossing joins the corners d0 (between d0
// and d1) and d2, i.e. the regions swept when the over strand is turned
// counterclockwise; arcs then join d1-d2 and d3-d0. The B-smoothing joins
// d0-d1 and d2-d3. In a state mask, bit i set means crossing i is A-smoothed.
//
// Crossingless diagrams are carried separately: a number of free trivial
// loops, plus optional loops drawn as closed walks on a given surface map.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "surftutte/corpus.hpp"
#include "surftutte/homology.hpp"
#include "surftutte/linalg.hpp"
#include "surftutte/map.hpp"
#include "surftutte/poly.hpp"
#include "surftutte/report.hpp"

namespace surftutte {

constexpr int kDefaultCrossingCap = 20;

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Crossing diagram: base must be 4-valent (NotFourValent); over_darts lists,
  // for each crossing (base vertex), one dart of its over strand, and the
  // opposite dart is the other one.
  LinkDiagram(CombinatorialMap base, const std::vector<int>& over_darts);
  // Crossingless diagram on the surface of `surface`: `free_loops` trivial
  // circles plus the given closed walks (dart sequences).
  static LinkDiagram crossingless(CombinatorialMap surface, int free_loops,
                                  const std::vector<std::vector<int>>& walks = {});

  const CombinatorialMap& base() const { return base_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::array<int, 4>& crossing(int i) const { return crossings_[static_cast<std::size_t>(i)]; }
  // Position (0..3) of dart d in its crossing.
  int position(int d) const { return position_[static_cast<std::size_t>(d)]; }
  int genus() const { return base_.genus(); }
  int free_loops() const { return free_loops_; }
  void set_free_loops(int n) { free_loops_ = n; }
  // Edge chains (in the base map) of the loops of a crossingless diagram.
  const std::vector<Vector>& surface_loops() const { return surface_loops_; }
  const std::vector<std::vector<int>>& surface_walks() const { return walks_; }

  // Strand components through crossings: each is listed by the darts leaving
  // crossings in one direction of travel, starting at its smallest dart.
  std::vector<std::vector<int>> strands() const;

  // One outgoing dart per strand component (empty when not oriented).
  const std::vector<int>& orientation() const { return orientation_; }
  void set_orientation(std::vector<int> leading_darts);
  bool is_oriented() const;
  // Orients every strand along its smallest dart.
  void orient_default();

 private:
  CombinatorialMap base_;
  std::vector<std::array<int, 4>> crossings_;
  std::vector<int> position_;
  std::vector<int> orientation_;
  int free_loops_ = 0;
  std::vector<Vector> surface_loops_;
  std::vector<std::vector<int>> walks_;
};

// .vlk text (see README for the grammar) and its inverse.
LinkDiagram parse_diagram(std::string_view text);
LinkDiagram load_diagram_file(const std::string& path);
std::string serialize_diagram(const LinkDiagram& d);

// Switches over and under at one crossing / at every crossing.
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing);
LinkDiagram mirror(const LinkDiagram& d);

// The alternating diagram whose Tait graph is g: one crossing per edge, one
// strand segment per corner, vertex regions shaded.
LinkDiagram medial_diagram(const CombinatorialMap& g);
// Medial diagram of a random connected map with the given genus and an edge
// count in [min_crossings, max_crossings].
LinkDiagram random_alternating_diagram(Rng& rng, int genus, int min_crossings, int max_crossings);

struct ResolutionState {
  std::uint64_t choice = 0;
  int alpha_count = 0;
  int beta_count = 0;
  int c = 0;
  int r = 0;
  int k = 0;
  std::vector<std::vector<int>> curves;  // arrival darts in order of travel
  Subspace image;                        // span of the curve classes
};

class StateEnumerator {
 public:
  explicit StateEnumerator(const LinkDiagram& d, int cap = kDefaultCrossingCap);

  const LinkDiagram& diagram() const { return diagram_; }
  const SurfaceHomology& homology() const { return homology_; }
  std::uint64_t state_count() const { return std::uint64_t{1} << diagram_.crossing_count(); }
  ResolutionState state(std::uint64_t choice) const;

 private:
  LinkDiagram diagram_;
  SurfaceHomology homology_;
};

std::vector<ResolutionState> states(const LinkDiagram& d, int cap = kDefaultCrossingCap);

struct LinkOptions {
  int cap = kDefaultCrossingCap;
  bool parallel = true;
};

// sum over states of A^alpha B^beta d^k Z^r.
Poly kauffman(const LinkDiagram& d, const LinkOptions& options = {});
// sum over states of [V(S)] A^alpha B^beta d^k.
using TildeK = std::map<Subspace, Poly>;
TildeK tilde_kauffman(const LinkDiagram& d, const LinkOptions& options = {});
// [V] -> Z^{dim V}.
Poly specialize(const TildeK& k);

int writhe(const LinkDiagram& d);
// (-1)^w u^{3w} K(u^-1, u, -u^2-u^-2, Z), with t = u^4.
Poly jones(const LinkDiagram& d, const LinkOptions& options = {});
// The same prefactor and substitution applied to every coefficient of TildeK.
TildeK tilde_jones(const LinkDiagram& d, const LinkOptions& options = {});
// Classical bracket in A: sum of A^{alpha-beta} (-A^2-A^-2)^{c-1}, so the
// trivial circle has bracket 1.
Poly classical_bracket(const LinkDiagram& d, const LinkOptions& options = {});
// (-A^3)^{-w} times the classical bracket, written in u = A^-1 (t = u^4).
Poly classical_jones(const LinkDiagram& d, const LinkOptions& options = {});

struct TaitGraph {
  CombinatorialMap map;            // edge i belongs to crossing i
  std::vector<int> vertex_region;  // Tait vertex -> base face
};
// Shaded regions are those containing A-corners.
TaitGraph tait_graph(const LinkDiagram& d);

// The bracket/Tait-polynomial identity, the per-state correspondences with
// the Tait subgraph H made of the A-smoothed crossings, and the shading swap.
PolynomialReport verify_thistlethwaite(const LinkDiagram& d, const LinkOptions& options = {});

}  // namespace surftutte
