#pragma once

// The edge-weighted polynomial
//
//   Pbar_G(q, A, B, {v_e}) = sum over spanning H of q^{c(H)} A^{s(H)/2} B^{s_perp(H)/2} prod_{e in H} v_e
//
// with its specialisations to the multivariate Tutte polynomial Z_G (A = B = 1)
// and to P_G, and the duality relation with dual weights q / v_e.

#include <string>
#include <string_view>
#include <vector>

#include "surftutte/map.hpp"
#include "surftutte/poly.hpp"
#include "surftutte/report.hpp"
#include "surftutte/surface_tutte.hpp"

namespace surftutte {

// One Laurent monomial per host edge. Edge e of a map and edge e* of its
// dual share an index, so the same weighting transports to the dual.
class EdgeWeighting {
 public:
  EdgeWeighting() = default;
  // v<id> for every host edge, id being the edge's smaller dart (1-based).
  static EdgeWeighting symbolic(const CombinatorialMap& host);
  // Symbolic defaults overridden by `edge <id> = <monomial>` lines.
  static EdgeWeighting parse(std::string_view text, const CombinatorialMap& host);
  static EdgeWeighting load(const std::string& path, const CombinatorialMap& host);

  const Poly& weight(int edge) const { return weights_[static_cast<std::size_t>(edge)]; }
  int size() const { return static_cast<int>(weights_.size()); }
  // Replaces every weight w by q / w.
  EdgeWeighting dual_weights() const;

 private:
  static void validate(const Poly& w, const std::string& where);
  std::vector<Poly> weights_;
};

Poly p_bar(const EmbeddedSubgraph& graph, const EdgeWeighting& w, const EvalOptions& options = {});
// sum over H of q^{c(H)} prod_{e in H} v_e, by direct union-find.
Poly multivariate_tutte(const EmbeddedSubgraph& graph, const EdgeWeighting& w, const EvalOptions& options = {});

// Pbar(A=B=1) = Z_G and Pbar(q=XY, v=Y, A/Y, BY) = X^{c(G)} Y^{g+v(G)} P_G.
PolynomialReport verify_multivariate_specializations(const EmbeddedSubgraph& graph, const EdgeWeighting& w,
                                                     const EvalOptions& options = {});
// Pbar_{G*}(q,v,A,B) = q^{-g+c(G*)-v(G)} (prod v_e) Pbar_G(q, q/v, B/q, Aq), and on
// planar maps Z_{G*}(q,v) = q^{c(G)-v(G)} (prod v_e) Z_G(q, q/v).
PolynomialReport verify_multivariate_duality(const CombinatorialMap& m, const EdgeWeighting& w,
                                             const EvalOptions& options = {});

}  // namespace surftutte
