#include "surftutte/surface_tutte.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "surftutte/error.hpp"
#include "surftutte/kernels.hpp"

namespace surftutte {

namespace {

const Poly kX = Poly::variable("X");
const Poly kY = Poly::variable("Y");
const Poly kA = Poly::variable("A");
const Poly kB = Poly::variable("B");
const Poly kZ = Poly::variable("Z");
const Poly kT = Poly::variable("t");

void check_cap(int edges, int cap) {
  if (edges > cap)
    throw Error(ErrorCode::TooManyEdges, std::to_string(edges) + " edges exceed the brute-force cap of " +
                                             std::to_string(cap) + " (use the recursive evaluator or raise --cap)");
}

Poly p_from_histogram(const StateHistogram& hist) {
  std::map<Exponents, mpz_class> raw;
  for (const auto& [key, count] : hist) {
    Exponents e{static_cast<int>(key[2]), static_cast<int>(key[3]), static_cast<int>(key[0]), static_cast<int>(key[1])};
    raw[e] += mpz_class(std::to_string(count));
  }
  return Poly::from_terms({"A", "B", "X", "Y"}, raw);
}

StateKey p_key(const InvariantContext& ctx, const SubgraphInvariants& inv) {
  return {inv.c - ctx.graph_components(), inv.k, inv.s / 2, inv.s_perp / 2};
}

Poly sum_states(const EmbeddedSubgraph& graph, bool parallel) {
  InvariantContext ctx(graph);
  auto key = [&ctx](std::uint64_t, const SubgraphInvariants& inv) { return p_key(ctx, inv); };
  return p_from_histogram(accumulate(ctx, key, parallel));
}

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

class Recursor {
 public:
  Poly eval(const EmbeddedSubgraph& s) {
    const std::string code = canonical_code(s);
    if (auto it = memo_.find(code); it != memo_.end()) return it->second;
    Poly result = expand(s);
    memo_.emplace(code, result);
    return result;
  }

 private:
  Poly expand(const EmbeddedSubgraph& s) {
    const auto& m = s.host();
    int bridge = -1;
    for (int e : s.graph_edges()) {
      if (m.is_loop(e)) continue;
      if (!is_bridge(s, e)) return eval(delete_edge(s, e)) + eval(contract_edge(s, e));
      if (bridge < 0) bridge = e;
    }
    if (bridge >= 0) return (1 + kX) * eval(contract_edge(s, bridge));
    return sum_states(s, false);
  }

  std::unordered_map<std::string, Poly> memo_;
};

Poly expand_x_minus_one(const StateHistogram& hist, const std::string& third) {
  // keys: (c(H)-c(G), n(H), third exponent, unused)
  std::map<std::int64_t, Poly> powers;
  Poly out;
  for (const auto& [key, count] : hist) {
    auto it = powers.find(key[0]);
    if (it == powers.end()) it = powers.emplace(key[0], (kX - 1).pow(static_cast<int>(key[0]))).first;
    out += Poly(mpz_class(std::to_string(count))) * it->second *
           Poly::monomial(1, {{"Y", static_cast<int>(key[1])}, {third, static_cast<int>(key[2])}});
  }
  return out;
}

Poly sub(const Poly& p, std::map<std::string, Poly> bindings) { return p.substitute(bindings); }

// BR(1 + a, b, (XY)^{-1/2}); Z only occurs with even exponents.
Poly br_two_variable(const Poly& br, const Poly& a, const Poly& b) {
  Poly p = sub(br, {{"X", 1 + a}, {"Y", b}});
  p = p.scale_exponent("Z", 2);
  return sub(p, {{"Z", kX.pow(-1) * kY.pow(-1)}});
}

}  // namespace

bool is_bridge(const EmbeddedSubgraph& graph, int edge) {
  const auto& m = graph.host();
  if (m.is_loop(edge)) return false;
  std::vector<int> parent(static_cast<std::size_t>(m.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e : graph.graph_edges()) {
    if (e == edge) continue;
    parent[static_cast<std::size_t>(find(parent, m.edge_tail(e)))] = find(parent, m.edge_head(e));
  }
  return find(parent, m.edge_tail(edge)) != find(parent, m.edge_head(edge));
}

Poly p_bruteforce(const EmbeddedSubgraph& graph, const EvalOptions& options) {
  check_cap(graph.graph_edge_count(), options.cap);
  return sum_states(graph, options.parallel);
}

Poly p_recursive(const EmbeddedSubgraph& graph) {
  Recursor r;
  return r.eval(graph);
}

Multigraph underlying_graph(const EmbeddedSubgraph& graph) {
  const auto& m = graph.host();
  std::vector<int> local(static_cast<std::size_t>(m.vertex_count()), -1);
  Multigraph g;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (graph.has_vertex(v)) local[static_cast<std::size_t>(v)] = g.vertices++;
  for (int e : graph.graph_edges())
    g.edges.emplace_back(local[static_cast<std::size_t>(m.edge_tail(e))], local[static_cast<std::size_t>(m.edge_head(e))]);
  return g;
}

Poly tutte(const Multigraph& graph, int cap) {
  const int e = static_cast<int>(graph.edges.size());
  check_cap(e, cap);
  auto components = [&](std::uint64_t mask) {
    std::vector<int> parent(static_cast<std::size_t>(graph.vertices));
    std::iota(parent.begin(), parent.end(), 0);
    int c = graph.vertices;
    for (int i = 0; i < e; ++i) {
      if (!((mask >> i) & 1U)) continue;
      int a = find(parent, graph.edges[static_cast<std::size_t>(i)].first);
      int b = find(parent, graph.edges[static_cast<std::size_t>(i)].second);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --c;
      }
    }
    return c;
  };
  const int cg = components(e == 0 ? 0 : ~std::uint64_t{0} >> (64 - e));
  std::map<Exponents, mpz_class> raw;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    const int c = components(mask);
    const int edges = __builtin_popcountll(mask);
    raw[{c - cg, edges - graph.vertices + c}] += 1;
  }
  return Poly::from_terms({"X", "Y"}, raw);
}

Poly bollobas_riordan(const CombinatorialMap& m, const EvalOptions& options) {
  check_cap(m.edge_count(), options.cap);
  InvariantContext ctx(EmbeddedSubgraph::whole(m));
  auto key = [&ctx](std::uint64_t, const SubgraphInvariants& inv) {
    return StateKey{inv.c - ctx.graph_components(), inv.n, inv.s, 0};
  };
  return expand_x_minus_one(accumulate(ctx, key, options.parallel), "Z");
}

Poly p_prime(const CombinatorialMap& m, const EvalOptions& options) {
  check_cap(m.edge_count(), options.cap);
  InvariantContext primal(EmbeddedSubgraph::whole(m));
  InvariantContext dual_ctx(EmbeddedSubgraph::whole(dual(m)));
  const std::uint64_t full = m.edge_count() == 0 ? 0 : ~std::uint64_t{0} >> (64 - m.edge_count());
  auto ps = primal.make_scratch();
  auto ds = dual_ctx.make_scratch();
  std::map<Exponents, mpz_class> raw;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const auto h = primal.compute(mask, ps);
    const auto hd = dual_ctx.compute(full & ~mask, ds);
    raw[{h.s, hd.s, h.c - primal.graph_components(), h.n}] += 1;
    if (mask == full) break;
  }
  return Poly::from_terms({"A", "B", "X", "Y"}, raw);
}

PolynomialReport verify_duality(const CombinatorialMap& m, const EvalOptions& options) {
  PolynomialReport report;
  const std::string witness = serialize_map(m);
  const auto g = EmbeddedSubgraph::whole(m);
  const auto gd = EmbeddedSubgraph::whole(dual(m));
  const Poly p = p_bruteforce(g, options);
  const Poly pd = p_bruteforce(gd, options);
  report.polynomials = {{"P_G", p}, {"P_G*", pd}};
  report.check_equal("duality P_G(X,Y,A,B) = P_G*(Y,X,B,A)", p, sub(pd, {{"X", kY}, {"Y", kX}, {"A", kB}, {"B", kA}}),
                     witness);

  InvariantContext primal(g), dual_ctx(gd);
  const std::uint64_t full = m.edge_count() == 0 ? 0 : ~std::uint64_t{0} >> (64 - m.edge_count());
  auto ps = primal.make_scratch();
  auto ds = dual_ctx.make_scratch();
  for (std::uint64_t mask = 0;; ++mask) {
    const auto h = primal.compute(mask, ps);
    const auto hd = dual_ctx.compute(full & ~mask, ds);
    const bool ok = h.s == hd.s_perp && h.s_perp == hd.s && hd.c - dual_ctx.graph_components() == h.k &&
                    h.c - primal.graph_components() == hd.k;
    if (!ok) {
      report.check("dual subgraph exponent swap", false,
                   "s, s_perp, k, c of H and H* do not pair up", witness + "mask: " + std::to_string(mask) + "\n");
      return report;
    }
    if (mask == full) break;
  }
  report.check("dual subgraph exponent swap", true);
  return report;
}

PolynomialReport verify_specializations(const CombinatorialMap& m, const EvalOptions& options) {
  PolynomialReport report;
  const std::string witness = serialize_map(m);
  const int g = m.genus();
  const auto whole = EmbeddedSubgraph::whole(m);
  const Poly p = p_bruteforce(whole, options);
  const Poly pd = p_bruteforce(EmbeddedSubgraph::whole(dual(m)), options);
  const Poly yg = kY.pow(g);
  const Poly inv_x = kX.pow(-1), inv_y = kY.pow(-1), inv_t = kT.pow(-1);

  const Poly t = tutte(underlying_graph(whole), std::max(options.cap, 24));
  report.check_equal("tutte T = Y^g P(X,Y,Y,1/Y)", t, yg * sub(p, {{"A", kY}, {"B", inv_y}}), witness);

  const Poly br = bollobas_riordan(m, options);
  report.check_equal("bollobas-riordan BR = Y^g P(X-1,Y,YZ^2,1/Y)", br,
                     yg * sub(p, {{"X", kX - 1}, {"A", kY * kZ * kZ}, {"B", inv_y}}), witness);

  const Poly pp = p_prime(m, options);
  report.check_equal("p-prime P' = Y^g P(X,Y,A^2 Y,B^2/Y)", pp,
                     yg * sub(p, {{"A", kA * kA * kY}, {"B", kB * kB * inv_y}}), witness);
  report.polynomials = {{"P", p}, {"T", t}, {"BR", br}, {"P'", pp}};

  const Poly brd = bollobas_riordan(dual(m), options);
  const std::map<std::string, Poly> at_t{{"X", 1 + kT}, {"Y", kT}, {"Z", inv_t}};
  const Poly lhs1 = sub(br, at_t), rhs1 = sub(brd, at_t);
  report.check_equal("partial duality BR_G(1+t,t,1/t) = BR_G*(1+t,t,1/t)", lhs1, rhs1, witness);
  const std::map<std::string, Poly> p_at_t{{"X", kT}, {"Y", kT}, {"A", inv_t}, {"B", inv_t}};
  const Poly tg = kT.pow(g);
  const bool via1 = lhs1 == tg * sub(p, p_at_t) && rhs1 == tg * sub(pd, p_at_t) && sub(p, p_at_t) == sub(pd, p_at_t);
  report.check("partial duality BR_G(1+t,t,1/t) via P_G duality", via1,
               "lhs = " + lhs1.to_string() + "\nt^g P_G(t,t,1/t,1/t) = " + (tg * sub(p, p_at_t)).to_string(), witness);

  const Poly lhs2 = br_two_variable(br, kX, kY);
  const Poly dual_side = br_two_variable(brd, kY, kX);
  const Poly rhs2 = inv_x.pow(g) * yg * dual_side;
  report.check_equal("partial duality BR_G(1+X,Y,(XY)^-1/2) = (Y/X)^g BR_G*(1+Y,X,(XY)^-1/2)", lhs2, rhs2, witness);
  const Poly p_side = sub(p, {{"A", inv_x}, {"B", inv_y}});
  const Poly pd_side = sub(pd, {{"X", kY}, {"Y", kX}, {"A", inv_y}, {"B", inv_x}});
  const bool via2 = lhs2 == yg * p_side && dual_side == kX.pow(g) * pd_side && p_side == pd_side;
  report.check("partial duality (Y/X)^g relation via P_G duality", via2,
               "Y^g P_G(X,Y,1/X,1/Y) = " + (yg * p_side).to_string() + "\nX^g P_G*(Y,X,1/Y,1/X) = " +
                   (kX.pow(g) * pd_side).to_string(),
               witness);

  Poly product(1);
  for (const auto& part : components(m)) product *= p_bruteforce(EmbeddedSubgraph::whole(part), options);
  report.check_equal("multiplicativity over components", p, product, witness);
  return report;
}

PolynomialReport verify_multiplicativity(const CombinatorialMap& a, const CombinatorialMap& b, const EvalOptions& options) {
  PolynomialReport report;
  const Poly pa = p_bruteforce(EmbeddedSubgraph::whole(a), options);
  const Poly pb = p_bruteforce(EmbeddedSubgraph::whole(b), options);
  const Poly pab = p_bruteforce(EmbeddedSubgraph::whole(disjoint_union(a, b)), options);
  report.polynomials = {{"P_G1", pa}, {"P_G2", pb}, {"P_G1+G2", pab}};
  report.check_equal("multiplicativity P_G1+G2 = P_G1 P_G2", pab, pa * pb,
                     serialize_map(a) + "---\n" + serialize_map(b));
  return report;
}

PolynomialReport verify_recurrences(const EmbeddedSubgraph& graph, const EvalOptions& options) {
  PolynomialReport report;
  const auto& m = graph.host();
  const Poly p = p_bruteforce(graph, options);
  InvariantContext ctx(graph);
  const auto edges = graph.graph_edges();
  bool del_con = true, bridge_rule = true, loop_rule = true;
  std::string detail, witness;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int e = edges[i];
    const std::string here = serialize_map(graph) + "edge: " + std::to_string(m.edge_dart(e) + 1) + "\n";
    if (m.is_loop(e)) {
      if (ctx.compute(std::uint64_t{1} << i).k != 1) continue;
      if (p != (1 + kY) * p_bruteforce(delete_edge(graph, e), options)) {
        if (loop_rule) witness = here;
        loop_rule = false;
      }
    } else if (is_bridge(graph, e)) {
      if (p != (1 + kX) * p_bruteforce(contract_edge(graph, e), options)) {
        if (bridge_rule) witness = here;
        bridge_rule = false;
      }
    } else if (p != p_bruteforce(delete_edge(graph, e), options) + p_bruteforce(contract_edge(graph, e), options)) {
      if (del_con) witness = here;
      del_con = false;
    }
  }
  report.check("contraction-deletion P_G = P_G-e + P_G/e", del_con, "rule fails", witness);
  report.check("bridge P_G = (1+X) P_G/e", bridge_rule, "rule fails", witness);
  report.check("trivial loop P_G = (1+Y) P_G-e", loop_rule, "rule fails", witness);
  return report;
}

}  // namespace surftutte
