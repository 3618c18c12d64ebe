#include "surftutte/homology.hpp"

#include <numeric>
#include <string>

#include "surftutte/error.hpp"
#include "surftutte/invariants.hpp"

namespace surftutte {

namespace {

Vector row_subset(const Vector& v, const std::vector<int>& columns) {
  Vector out;
  out.reserve(columns.size());
  for (int c : columns) out.push_back(v[static_cast<std::size_t>(c)]);
  return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (int r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

std::uint64_t full_mask(int edges) { return edges == 0 ? 0 : ~std::uint64_t{0} >> (64 - edges); }

std::vector<bool> mask_to_edges(std::uint64_t mask, int edges) {
  std::vector<bool> out(static_cast<std::size_t>(edges));
  for (int e = 0; e < edges; ++e) out[static_cast<std::size_t>(e)] = (mask >> e) & 1U;
  return out;
}

int union_find_components(const CombinatorialMap& m, const std::vector<bool>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(m.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int c = m.vertex_count();
  for (int e = 0; e < m.edge_count(); ++e) {
    if (!edges[static_cast<std::size_t>(e)]) continue;
    const int a = find(m.edge_tail(e)), b = find(m.edge_head(e));
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --c;
    }
  }
  return c;
}

Subspace classes_of(const SurfaceHomology& h, const Matrix& chains) {
  Matrix coords(0, h.dimension());
  for (int r = 0; r < chains.rows(); ++r) coords.append_row(h.coordinates(chains.row(r)));
  return Subspace(h.dimension(), coords);
}

}  // namespace

// ---------------------------------------------------------------------------

Subspace::Subspace(int ambient, const Matrix& spanning_rows) : ambient_(ambient) {
  if (spanning_rows.cols() != ambient) throw Error(ErrorCode::DimensionMismatch, "spanning vectors have the wrong length");
  basis_ = rref(spanning_rows).matrix;
}

bool Subspace::contains(const Vector& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector has the wrong length");
  Matrix m = basis_;
  m.append_row(v);
  return rank(m) == dim();
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.ambient_; ++c) {
      const int cmp = ::cmp(a.basis_.at(r, c), b.basis_.at(r, c));
      if (cmp != 0) return cmp < 0;
    }
  return false;
}

std::string Subspace::to_string() const {
  return "dim=" + std::to_string(dim()) + " basis=" + basis_.to_string();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::DimensionMismatch, "subspaces live in different spaces");
  const Matrix annihilators = stack(nullspace(a.basis()), nullspace(b.basis()));
  return Subspace(a.ambient(), nullspace(annihilators));
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::DimensionMismatch, "subspaces live in different spaces");
  return Subspace(a.ambient(), stack(a.basis(), b.basis()));
}

// ---------------------------------------------------------------------------

Vector face_boundary(const CombinatorialMap& m, int face) {
  Vector v(static_cast<std::size_t>(m.edge_count()));
  for (int d : m.face_darts(face)) v[static_cast<std::size_t>(m.edge_of(d))] += m.dart_sign(d);
  return v;
}

Matrix subgraph_cycles(const CombinatorialMap& m, const std::vector<bool>& edges) {
  std::vector<int> chosen;
  for (int e = 0; e < m.edge_count(); ++e)
    if (edges[static_cast<std::size_t>(e)]) chosen.push_back(e);
  Matrix op(m.vertex_count(), static_cast<int>(chosen.size()));
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const int e = chosen[i];
    op.at(m.edge_head(e), static_cast<int>(i)) += 1;
    op.at(m.edge_tail(e), static_cast<int>(i)) -= 1;
  }
  const Matrix local = nullspace(op);
  Matrix out(0, m.edge_count());
  for (int r = 0; r < local.rows(); ++r) {
    Vector v(static_cast<std::size_t>(m.edge_count()));
    for (std::size_t i = 0; i < chosen.size(); ++i) v[static_cast<std::size_t>(chosen[i])] = local.at(r, static_cast<int>(i));
    out.append_row(v);
  }
  return out;
}

SurfaceHomology::SurfaceHomology(const CombinatorialMap& m) : map_(m) {
  const int edges = m.edge_count();
  cycles_ = subgraph_cycles(m, std::vector<bool>(static_cast<std::size_t>(edges), true));
  boundary_op_ = Matrix(m.vertex_count(), edges);
  for (int e = 0; e < edges; ++e) {
    boundary_op_.at(m.edge_head(e), e) += 1;
    boundary_op_.at(m.edge_tail(e), e) -= 1;
  }

  Matrix faces(0, edges);
  for (int f = 0; f < m.face_count(); ++f) faces.append_row(face_boundary(m, f));
  boundaries_ = rref(faces).matrix;

  representatives_ = Matrix(0, edges);
  Matrix span = boundaries_;
  int current = span.rows();
  for (int r = 0; r < cycles_.rows(); ++r) {
    Matrix trial = span;
    trial.append_row(cycles_.row(r));
    if (rank(trial) > current) {
      span = std::move(trial);
      ++current;
      representatives_.append_row(cycles_.row(r));
    }
  }
  if (representatives_.rows() != 2 * m.genus())
    throw Error(ErrorCode::InternalEulerParity, "H1 has dimension " + std::to_string(representatives_.rows()) +
                                                   " on a surface of genus " + std::to_string(m.genus()));

  const int r = span.rows();
  Matrix augmented(r, edges + r);
  for (int i = 0; i < r; ++i) {
    for (int c = 0; c < edges; ++c) augmented.at(i, c) = span.at(i, c);
    augmented.at(i, edges + i) = 1;
  }
  const auto e = rref(augmented);
  pivots_ = e.pivots;
  transform_ = Matrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) transform_.at(i, j) = e.matrix.at(i, edges + j);

  build_intersection_form();
}

bool SurfaceHomology::is_cycle(const Vector& chain) const {
  const Vector b = boundary_op_ * chain;
  for (const auto& x : b)
    if (x != 0) return false;
  return true;
}

Vector SurfaceHomology::coordinates(const Vector& cycle) const {
  const Vector y = row_subset(cycle, pivots_);
  const int r = transform_.rows();
  const int g2 = dimension();
  Vector out(static_cast<std::size_t>(g2));
  for (int j = r - g2; j < r; ++j)
    for (int i = 0; i < r; ++i) out[static_cast<std::size_t>(j - (r - g2))] += y[static_cast<std::size_t>(i)] * transform_.at(i, j);
  return out;
}

mpq_class SurfaceHomology::pairing(const Vector& z, const Vector& w) const { return dot(z, loop_form_ * w); }

void SurfaceHomology::build_intersection_form() {
  const auto& m = map_;
  const int edges = m.edge_count();

  // Spanning forest.
  std::vector<int> parent(static_cast<std::size_t>(m.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<int> tree;
  std::vector<bool> in_tree(static_cast<std::size_t>(edges), false);
  for (int e = 0; e < edges; ++e) {
    const int a = find(m.edge_tail(e)), b = find(m.edge_head(e));
    if (a == b) continue;
    parent[static_cast<std::size_t>(a)] = b;
    tree.push_back(e);
    in_tree[static_cast<std::size_t>(e)] = true;
  }

  EmbeddedSubgraph s = EmbeddedSubgraph::whole(m);
  std::vector<int> current(static_cast<std::size_t>(m.dart_count()));
  std::iota(current.begin(), current.end(), 0);
  for (int e : tree) {
    const int dart = current[static_cast<std::size_t>(m.edge_dart(e))];
    auto c = contract_edge_tracked(s, s.host().edge_of(dart));
    for (auto& x : current)
      if (x >= 0) x = c.dart_map[static_cast<std::size_t>(x)];
    s = std::move(c.result);
  }

  const auto& reduced = s.host();
  std::vector<int> original(static_cast<std::size_t>(reduced.dart_count()));
  for (int d = 0; d < m.dart_count(); ++d)
    if (current[static_cast<std::size_t>(d)] >= 0) original[static_cast<std::size_t>(current[static_cast<std::size_t>(d)])] = d;

  loop_form_ = Matrix(edges, edges);
  std::vector<int> position(static_cast<std::size_t>(m.dart_count()), -1), size_of(position.size(), 0);
  for (int v = 0; v < reduced.vertex_count(); ++v) {
    const auto& ds = reduced.vertex_darts(v);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      position[static_cast<std::size_t>(original[static_cast<std::size_t>(ds[i])])] = static_cast<int>(i);
      size_of[static_cast<std::size_t>(original[static_cast<std::size_t>(ds[i])])] = static_cast<int>(ds.size());
    }
  }
  for (int a = 0; a < edges; ++a) {
    if (in_tree[static_cast<std::size_t>(a)]) continue;
    const int a_out = m.edge_dart(a), a_in = m.alpha(a_out);
    const int n = size_of[static_cast<std::size_t>(a_out)];
    auto rel = [&](int d) { return ((position[static_cast<std::size_t>(d)] - position[static_cast<std::size_t>(a_in)]) % n + n) % n; };
    const int span_end = rel(a_out);
    for (int b = 0; b < edges; ++b) {
      if (b == a || in_tree[static_cast<std::size_t>(b)]) continue;
      const int b_out = m.edge_dart(b), b_in = m.alpha(b_out);
      if (reduced.vertex_of(current[static_cast<std::size_t>(b_out)]) != reduced.vertex_of(current[static_cast<std::size_t>(a_out)]))
        continue;
      const bool in_between = rel(b_in) < span_end;
      const bool out_between = rel(b_out) < span_end;
      if (in_between == out_between) continue;
      loop_form_.at(a, b) = in_between ? 1 : -1;
    }
  }

  for (int f = 0; f < m.face_count(); ++f) {
    const Vector bf = face_boundary(m, f);
    for (int r = 0; r < cycles_.rows(); ++r)
      if (pairing(bf, cycles_.row(r)) != 0)
        throw Error(ErrorCode::RadicalNotBoundaries, "face " + std::to_string(f) + " pairs nontrivially with a cycle");
  }

  const int g2 = dimension();
  omega_ = Matrix(g2, g2);
  for (int i = 0; i < g2; ++i)
    for (int j = 0; j < g2; ++j) omega_.at(i, j) = pairing(representatives_.row(i), representatives_.row(j));
  for (int i = 0; i < g2; ++i)
    for (int j = 0; j < g2; ++j)
      if (omega_.at(i, j) != -omega_.at(j, i))
        throw Error(ErrorCode::RadicalNotBoundaries, "intersection form is not skew-symmetric");
  if (g2 > 0 && determinant(omega_) == 0)
    throw Error(ErrorCode::RadicalNotBoundaries, "intersection form is degenerate on H1");
}

// ---------------------------------------------------------------------------

Subspace image_subspace(const SurfaceHomology& h, const std::vector<bool>& edges) {
  return classes_of(h, subgraph_cycles(h.map(), edges));
}

ImageData image_data(const SurfaceHomology& h, const EmbeddedSubgraph& graph, const std::vector<bool>& h_edges) {
  to_graph_mask(graph, h_edges);
  const Matrix cycles = subgraph_cycles(h.map(), h_edges);
  ImageData out;
  out.v = classes_of(h, cycles);
  out.nullity = cycles.rows();
  out.k = out.nullity - out.v.dim();
  return out;
}

Subspace orthogonal_complement(const Subspace& v, const Matrix& omega) {
  if (omega.rows() != v.ambient() || omega.cols() != v.ambient())
    throw Error(ErrorCode::DimensionMismatch, "form and subspace dimensions differ");
  Matrix conditions(0, v.ambient());
  for (int r = 0; r < v.dim(); ++r) conditions.append_row(omega * v.basis().row(r));
  return Subspace(v.ambient(), nullspace(conditions));
}

SymplecticData symplectic_data(const Subspace& v, const Matrix& omega) {
  const Subspace perp = orthogonal_complement(v, omega);
  SymplecticData d;
  d.l = intersect(v, perp).dim();
  d.s = v.dim() - d.l;
  d.s_perp = perp.dim() - d.l;
  return d;
}

TildeP tilde_p(const EmbeddedSubgraph& graph, const EvalOptions& options) {
  if (graph.graph_edge_count() > options.cap)
    throw Error(ErrorCode::TooManyEdges, std::to_string(graph.graph_edge_count()) + " edges exceed the cap of " +
                                             std::to_string(options.cap));
  const SurfaceHomology h(graph.host());
  const InvariantContext ctx(graph);
  TildeP out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ctx.edge_count()); ++mask) {
    const auto data = image_data(h, graph, to_host_mask(graph, mask));
    const int c = ctx.compute(mask).c - ctx.graph_components();
    out[data.v] += Poly::monomial(1, {{"X", c}, {"Y", data.k}});
  }
  return out;
}

Poly specialize(const TildeP& p, const Matrix& omega) {
  Poly out;
  for (const auto& [v, coeff] : p) {
    const auto d = symplectic_data(v, omega);
    out += Poly::monomial(1, {{"A", d.s / 2}, {"B", d.s_perp / 2}}) * coeff;
  }
  return out;
}

std::string to_string(const TildeP& p) {
  std::string out;
  for (const auto& [v, coeff] : p) out += v.to_string() + ": " + coeff.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------

CombinatorialMap radial_map(const CombinatorialMap& m) {
  const int n = m.dart_count();
  std::vector<int> sigma(static_cast<std::size_t>(2 * n)), alpha(sigma.size());
  for (int t = 0; t < n; ++t) {
    sigma[static_cast<std::size_t>(2 * t)] = 2 * m.sigma(t);
    sigma[static_cast<std::size_t>(2 * t + 1)] = 2 * m.sigma_inv(m.alpha(t)) + 1;
    alpha[static_cast<std::size_t>(2 * t)] = 2 * t + 1;
    alpha[static_cast<std::size_t>(2 * t + 1)] = 2 * t;
  }
  return CombinatorialMap(std::move(sigma), std::move(alpha), 0);
}

Vector primal_to_radial(const CombinatorialMap& m, const Vector& chain) {
  Vector out(static_cast<std::size_t>(m.dart_count()));
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto& c = chain[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    const int d = m.edge_dart(e);
    out[static_cast<std::size_t>(m.sigma_inv(d))] += c;
    out[static_cast<std::size_t>(m.alpha(d))] -= c;
  }
  return out;
}

Vector dual_to_radial(const CombinatorialMap& m, const Vector& chain) {
  Vector out(static_cast<std::size_t>(m.dart_count()));
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto& c = chain[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    const int d = m.edge_dart(e);
    out[static_cast<std::size_t>(d)] += c;
    out[static_cast<std::size_t>(m.sigma_inv(d))] -= c;
  }
  return out;
}

PolynomialReport verify_subgroup_duality(const CombinatorialMap& m, const EvalOptions& options) {
  PolynomialReport report;
  const int edges = m.edge_count();
  if (edges > options.cap)
    throw Error(ErrorCode::TooManyEdges, std::to_string(edges) + " edges exceed the cap of " + std::to_string(options.cap));
  const std::string witness = serialize_map(m);
  const CombinatorialMap dm = dual(m);
  const SurfaceHomology radial(radial_map(m));
  const Matrix& omega = radial.intersection_form();
  const int g2 = 2 * m.genus();
  const int dual_components = union_find_components(dm, std::vector<bool>(static_cast<std::size_t>(edges), true));

  auto to_radial = [&](const Matrix& cycles, bool primal) {
    Matrix out(0, radial.dimension());
    for (int r = 0; r < cycles.rows(); ++r) {
      const Vector chain = primal ? primal_to_radial(m, cycles.row(r)) : dual_to_radial(m, cycles.row(r));
      if (!radial.is_cycle(chain)) throw Error(ErrorCode::InternalEulerParity, "chain map does not preserve cycles");
      out.append_row(radial.coordinates(chain));
    }
    return Subspace(radial.dimension(), out);
  };

  bool dims_ok = radial.dimension() == g2, perp_ok = true, sum_ok = true, swap_ok = true;
  std::string perp_witness, sum_witness, swap_witness;
  const std::uint64_t full = full_mask(edges);
  for (std::uint64_t mask = 0;; ++mask) {
    const auto h_edges = mask_to_edges(mask, edges);
    const auto d_edges = mask_to_edges(full & ~mask, edges);
    const Matrix zh = subgraph_cycles(m, h_edges);
    const Subspace v = to_radial(zh, true);
    const Subspace v_dual = to_radial(subgraph_cycles(dm, d_edges), false);
    const std::string here = witness + "mask: " + std::to_string(mask) + "\n";
    if (perp_ok && !(v_dual == orthogonal_complement(v, omega))) {
      perp_ok = false;
      perp_witness = here + "V(H) " + v.to_string() + "\nV(H*) " + v_dual.to_string() + "\n";
    }
    if (sum_ok && v.dim() + v_dual.dim() != g2) {
      sum_ok = false;
      sum_witness = here;
    }
    const int k = zh.rows() - v.dim();
    if (swap_ok && union_find_components(dm, d_edges) - dual_components != k) {
      swap_ok = false;
      swap_witness = here;
    }
    if (mask == full) break;
  }
  report.check("radial H1 has dimension 2g", dims_ok, "dimension " + std::to_string(radial.dimension()), witness);
  report.check("V(H*) = V(H)^perp", perp_ok, "subspaces differ", perp_witness);
  report.check("dim V(H) + dim V(H*) = 2g", sum_ok, "dimension count fails", sum_witness);
  report.check("c(H*) - c(G*) = k(H)", swap_ok, "exponent swap fails", swap_witness);
  return report;
}

PolynomialReport verify_homology_cross_check(const EmbeddedSubgraph& graph, const EvalOptions& options) {
  PolynomialReport report;
  if (graph.graph_edge_count() > options.cap)
    throw Error(ErrorCode::TooManyEdges, std::to_string(graph.graph_edge_count()) + " edges exceed the cap of " +
                                             std::to_string(options.cap));
  const SurfaceHomology h(graph.host());
  const InvariantContext ctx(graph);
  const int g2 = 2 * graph.host().genus();
  bool agree = true, identities = true;
  std::string agree_witness, identity_witness, detail;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ctx.edge_count()); ++mask) {
    const auto comb = ctx.compute(mask);
    const auto lin = image_data(h, graph, to_host_mask(graph, mask));
    const auto sym = symplectic_data(lin.v, h.intersection_form());
    const std::string here = serialize_map(graph) + "mask: " + std::to_string(mask) + "\n";
    if (agree && (comb.k != lin.k || comb.s != sym.s || comb.s_perp != sym.s_perp || comb.l != sym.l ||
                  comb.n != lin.nullity)) {
      agree = false;
      agree_witness = here;
      detail = "combinatorial (k,s,s_perp,l) = (" + std::to_string(comb.k) + "," + std::to_string(comb.s) + "," +
               std::to_string(comb.s_perp) + "," + std::to_string(comb.l) + "), linear = (" + std::to_string(lin.k) +
               "," + std::to_string(sym.s) + "," + std::to_string(sym.s_perp) + "," + std::to_string(sym.l) + ")";
    }
    if (identities && (sym.s + sym.s_perp + 2 * sym.l != g2 || lin.k + sym.l + sym.s != lin.nullity)) {
      identities = false;
      identity_witness = here;
    }
  }
  report.check("combinatorial and linear-algebra invariants agree", agree, detail, agree_witness);
  report.check("s + s_perp + 2l = 2g and k + l + s = n", identities, "identity fails", identity_witness);
  return report;
}

}  // namespace surftutte
