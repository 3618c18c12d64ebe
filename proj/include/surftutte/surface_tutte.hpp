#pragma once

// The surface Tutte polynomial
//
//   P_G(X, Y, A, B) = sum over spanning H of X^{c(H)-c(G)} Y^{k(H)} A^{s(H)/2} B^{s_perp(H)/2}
//
// of a graph G drawn on a closed orientable surface, together with the
// classical Tutte polynomial, the Bollobas-Riordan polynomial, the ribbon
// reformulation P', and the identity checks relating them.

#include <cstdint>
#include <utility>
#include <vector>

#include "surftutte/invariants.hpp"
#include "surftutte/map.hpp"
#include "surftutte/poly.hpp"
#include "surftutte/report.hpp"

namespace surftutte {

constexpr int kDefaultEdgeCap = 20;

struct EvalOptions {
  int cap = kDefaultEdgeCap;
  bool parallel = true;
};

// Direct state sum over all 2^e spanning subgraphs (TooManyEdges past the cap).
Poly p_bruteforce(const EmbeddedSubgraph& graph, const EvalOptions& options = {});
// Contraction-deletion with memoisation on canonical codes; loops-only
// residues are summed directly.
Poly p_recursive(const EmbeddedSubgraph& graph);

struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
Multigraph underlying_graph(const EmbeddedSubgraph& graph);
// sum over spanning H of X^{c(H)-c(G)} Y^{n(H)}.
Poly tutte(const Multigraph& graph, int cap = 24);

// sum over H of (X-1)^{r(G)-r(H)} Y^{n(H)} Z^{s(H)} for the ribbon graph m.
Poly bollobas_riordan(const CombinatorialMap& m, const EvalOptions& options = {});
// sum over H of X^{c(H)-c(G)} Y^{n(H)} A^{s(H)} B^{s(H*)}, with s(H*) measured
// in dual(m).
Poly p_prime(const CombinatorialMap& m, const EvalOptions& options = {});

// P_G(X,Y,A,B) = P_{G*}(Y,X,B,A), plus the per-subgraph exponent swaps
// between H and H*.
PolynomialReport verify_duality(const CombinatorialMap& m, const EvalOptions& options = {});
// Tutte, Bollobas-Riordan and P' specialisations, both BR partial dualities
// (directly and through the main duality) and multiplicativity over the
// components of m.
PolynomialReport verify_specializations(const CombinatorialMap& m, const EvalOptions& options = {});
// P_{G1 disjoint G2} = P_{G1} P_{G2} for two ribbon graphs.
PolynomialReport verify_multiplicativity(const CombinatorialMap& a, const CombinatorialMap& b,
                                         const EvalOptions& options = {});
// Contraction-deletion, bridge and trivial-loop rules for every edge of G.
PolynomialReport verify_recurrences(const EmbeddedSubgraph& graph, const EvalOptions& options = {});

// Classification of the edges of G used by the recursion.
bool is_bridge(const EmbeddedSubgraph& graph, int edge);

}  // namespace surftutte
