#pragma once

// First homology of the surface presented by a map, over the rationals, and
// the intersection form on it.
//
// Chains live on oriented edges (edge e points from the vertex of its smaller
// dart). H1 = cycles / face boundaries; a fixed set of cycle representatives
// h_1..h_2g spans a complement of the boundaries and every cycle gets
// coordinates in that basis. The intersection form is read off the chord
// diagram left after contracting a spanning forest: two loops whose dart
// pairs interleave meet once, with sign +1 when the counterclockwise order is
// a_in, b_in, a_out, b_out (x_out being the smaller dart of edge x).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surftutte/linalg.hpp"
#include "surftutte/map.hpp"
#include "surftutte/poly.hpp"
#include "surftutte/report.hpp"
#include "surftutte/surface_tutte.hpp"

namespace surftutte {

// A linear subspace of Q^n stored by its reduced row-echelon basis, so equal
// subspaces have equal representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, const Matrix& spanning_rows);
  static Subspace zero(int ambient) { return Subspace(ambient, Matrix(0, ambient)); }
  static Subspace whole(int ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b);

  // "dim=<d> basis=[[..],..]"
  std::string to_string() const;

 private:
  int ambient_ = 0;
  Matrix basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace span_sum(const Subspace& a, const Subspace& b);

class SurfaceHomology {
 public:
  explicit SurfaceHomology(const CombinatorialMap& m);

  const CombinatorialMap& map() const { return map_; }
  int dimension() const { return representatives_.rows(); }
  const Matrix& cycle_basis() const { return cycles_; }
  const Matrix& boundary_basis() const { return boundaries_; }
  const Matrix& representatives() const { return representatives_; }

  bool is_cycle(const Vector& chain) const;
  // Coordinates of a cycle's class in the representative basis.
  Vector coordinates(const Vector& cycle) const;
  // Algebraic intersection number of two cycles.
  mpq_class pairing(const Vector& z, const Vector& w) const;
  // Gram matrix of the pairing on the representatives.
  const Matrix& intersection_form() const { return omega_; }
  // Intersection numbers of the loops left after forest contraction, indexed
  // by original edge (zero rows for tree edges).
  const Matrix& loop_form() const { return loop_form_; }

 private:
  void build_intersection_form();

  CombinatorialMap map_;
  Matrix boundary_op_;       // vertices x edges
  Matrix cycles_;            // basis of the cycle space (rows)
  Matrix boundaries_;        // RREF basis of face boundaries (rows)
  Matrix representatives_;   // H1 representatives (rows)
  std::vector<int> pivots_;  // pivot columns of [boundaries; representatives]
  Matrix transform_;         // coordinates = cycle[pivots] * transform_
  Matrix loop_form_;
  Matrix omega_;
};

// Boundary of a face as an edge chain.
Vector face_boundary(const CombinatorialMap& m, int face);
// Cycle space of the subgraph with the given host edges (rows are cycles).
Matrix subgraph_cycles(const CombinatorialMap& m, const std::vector<bool>& edges);

// V(H): span of the classes of H's cycles, in the coordinates of h.
Subspace image_subspace(const SurfaceHomology& h, const std::vector<bool>& edges);
struct ImageData {
  Subspace v;
  int nullity = 0;
  int k = 0;  // nullity - dim V
};
ImageData image_data(const SurfaceHomology& h, const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges);

// { x : omega(x, v) = 0 for all v in V }.
Subspace orthogonal_complement(const Subspace& v, const Matrix& omega);

// Symplectic dimensions of V: l = dim(V n Vperp), s = dim V - l, s_perp = dim Vperp - l.
struct SymplecticData {
  int s = 0;
  int s_perp = 0;
  int l = 0;
};
SymplecticData symplectic_data(const Subspace& v, const Matrix& omega);

// The polynomial with subgroup coefficients: each spanning H contributes
// X^{c(H)-c(G)} Y^{k(H)} to the coefficient of [V(H)].
using TildeP = std::map<Subspace, Poly>;
TildeP tilde_p(const EmbeddedSubgraph& graph, const EvalOptions& options = {});
// [V] -> A^{s/2} B^{s_perp/2}.
Poly specialize(const TildeP& p, const Matrix& omega);
std::string to_string(const TildeP& p);

// Radial map: one vertex per vertex and per face of m, one edge per corner
// (corner t is the sector at vertex_of(t) between t and sigma(t); its edge is
// oriented from the vertex to the face containing the corner), one
// quadrilateral per edge of m. Isolated vertices are dropped.
CombinatorialMap radial_map(const CombinatorialMap& m);
// Chain maps from edge chains of m and of dual(m) to edge chains of the
// radial map. Primal edge d runs vertex -> face(d) -> head; dual edge d* runs
// face(d) -> vertex_of(d) -> face(alpha d).
Vector primal_to_radial(const CombinatorialMap& m, const Vector& chain);
Vector dual_to_radial(const CombinatorialMap& m, const Vector& chain);

// V(H*) = V(H)^perp for every spanning H, with V(H) and V(H*) compared in
// H1 of the radial map; also dim V(H) + dim V(H*) = 2g and c(H*) - c(G*) = k(H).
PolynomialReport verify_subgroup_duality(const CombinatorialMap& m, const EvalOptions& options = {});
// Linear-algebra k, s, s_perp, l against the combinatorial invariants for
// every spanning H of the graph, plus s + s_perp + 2l = 2g and k + l + s = n.
PolynomialReport verify_homology_cross_check(const EmbeddedSubgraph& graph, const EvalOptions& options = {});

}  // namespace surftutte
