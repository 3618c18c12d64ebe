#include "surftutte/multivariate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "surftutte/error.hpp"
#include "surftutte/invariants.hpp"
#include "surftutte/kernels.hpp"

namespace surftutte {

namespace {

const std::set<std::string> kReserved{"q", "A", "B", "X", "Y", "Z", "d", "u"};

const Poly kQ = Poly::variable("q");

// Sums q^{c} A^{a} B^{b} prod w over a histogram keyed by (c, a, b, mask).
Poly weighted_sum(const StateHistogram& hist, const std::vector<int>& edges, const EdgeWeighting& w) {
  std::set<std::string> names{"q", "A", "B"};
  for (int e : edges)
    for (const auto& v : w.weight(e).variables()) names.insert(v);
  const std::vector<std::string> vars(names.begin(), names.end());
  auto column = [&vars](const std::string& name) {
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin());
  };

  struct Monomial {
    Exponents exps;
    mpz_class coeff;
  };
  std::vector<Monomial> weights;
  for (int e : edges) {
    const auto& p = w.weight(e);
    Monomial m{Exponents(vars.size(), 0), p.terms().begin()->second};
    for (const auto& v : p.variables()) m.exps[column(v)] = p.exponent_of(p.terms().begin()->first, v);
    weights.push_back(std::move(m));
  }

  std::map<Exponents, mpz_class> raw;
  const auto qc = column("q"), ac = column("A"), bc = column("B");
  for (const auto& [key, count] : hist) {
    Exponents exps(vars.size(), 0);
    mpz_class coeff(std::to_string(count));
    exps[qc] += static_cast<int>(key[0]);
    exps[ac] += static_cast<int>(key[1]);
    exps[bc] += static_cast<int>(key[2]);
    const auto mask = static_cast<std::uint64_t>(key[3]);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = 0; j < vars.size(); ++j) exps[j] += weights[i].exps[j];
      coeff *= weights[i].coeff;
    }
    raw[exps] += coeff;
  }
  return Poly::from_terms(vars, raw);
}

Poly weight_product(const EmbeddedSubgraph& graph, const EdgeWeighting& w) {
  Poly out(1);
  for (int e : graph.graph_edges()) out *= w.weight(e);
  return out;
}

}  // namespace

void EdgeWeighting::validate(const Poly& w, const std::string& where) {
  if (!w.is_monomial()) throw Error(ErrorCode::MalformedInput, where + ": weight must be a single Laurent monomial");
  for (const auto& v : w.variables())
    if (kReserved.count(v)) throw Error(ErrorCode::ReservedWeightName, where + ": '" + v + "' is reserved");
}

EdgeWeighting EdgeWeighting::symbolic(const CombinatorialMap& host) {
  EdgeWeighting w;
  for (int e = 0; e < host.edge_count(); ++e)
    w.weights_.push_back(Poly::variable("v" + std::to_string(host.edge_dart(e) + 1)));
  return w;
}

EdgeWeighting EdgeWeighting::parse(std::string_view text, const CombinatorialMap& host) {
  EdgeWeighting w = symbolic(host);
  static const std::regex line_re(R"(^\s*edge\s+(\d+)\s*=\s*(.+?)\s*$)");
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch match;
    const std::string where = "weights line " + std::to_string(number);
    if (!std::regex_match(line, match, line_re)) throw Error(ErrorCode::MalformedInput, where + ": expected 'edge <id> = <monomial>'");
    const long id = std::stol(match[1].str()) - 1;
    if (id < 0 || id >= host.dart_count() || host.alpha(static_cast<int>(id)) < id)
      throw Error(ErrorCode::MalformedInput, where + ": no edge with id " + match[1].str());
    Poly value = Poly::parse(match[2].str());
    validate(value, where);
    w.weights_[static_cast<std::size_t>(host.edge_of(static_cast<int>(id)))] = std::move(value);
  }
  return w;
}

EdgeWeighting EdgeWeighting::load(const std::string& path, const CombinatorialMap& host) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), host);
}

EdgeWeighting EdgeWeighting::dual_weights() const {
  EdgeWeighting out;
  for (const auto& w : weights_) out.weights_.push_back(kQ * w.pow(-1));
  return out;
}

Poly p_bar(const EmbeddedSubgraph& graph, const EdgeWeighting& w, const EvalOptions& options) {
  if (graph.graph_edge_count() > options.cap)
    throw Error(ErrorCode::TooManyEdges, std::to_string(graph.graph_edge_count()) + " edges exceed the cap of " +
                                             std::to_string(options.cap));
  if (w.size() != graph.host().edge_count()) throw Error(ErrorCode::MalformedInput, "weighting does not match the host");
  InvariantContext ctx(graph);
  auto key = [](std::uint64_t mask, const SubgraphInvariants& r) {
    return StateKey{r.c, r.s / 2, r.s_perp / 2, static_cast<std::int64_t>(mask)};
  };
  return weighted_sum(accumulate(ctx, key, options.parallel), ctx.edges(), w);
}

Poly multivariate_tutte(const EmbeddedSubgraph& graph, const EdgeWeighting& w, const EvalOptions& options) {
  const auto edges = graph.graph_edges();
  if (static_cast<int>(edges.size()) > options.cap)
    throw Error(ErrorCode::TooManyEdges, std::to_string(edges.size()) + " edges exceed the cap of " + std::to_string(options.cap));
  const auto& m = graph.host();
  std::vector<int> local(static_cast<std::size_t>(m.vertex_count()), -1);
  int vertices = 0;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (graph.has_vertex(v)) local[static_cast<std::size_t>(v)] = vertices++;
  StateHistogram hist;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    int c = vertices;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!((mask >> i) & 1U)) continue;
      const int a = find(local[static_cast<std::size_t>(m.edge_tail(edges[i]))]);
      const int b = find(local[static_cast<std::size_t>(m.edge_head(edges[i]))]);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --c;
      }
    }
    ++hist[StateKey{c, 0, 0, static_cast<std::int64_t>(mask)}];
  }
  return weighted_sum(hist, edges, w).substitute({{"A", Poly(1)}, {"B", Poly(1)}});
}

PolynomialReport verify_multivariate_specializations(const EmbeddedSubgraph& graph, const EdgeWeighting& w,
                                                     const EvalOptions& options) {
  PolynomialReport report;
  const std::string witness = serialize_map(graph);
  const Poly pbar = p_bar(graph, w, options);
  report.polynomials = {{"Pbar", pbar}};
  report.check_equal("Pbar(A=B=1) = Z_G", pbar.substitute({{"A", Poly(1)}, {"B", Poly(1)}}),
                     multivariate_tutte(graph, w, options), witness);

  const Poly X = Poly::variable("X"), Y = Poly::variable("Y"), A = Poly::variable("A"), B = Poly::variable("B");
  const EdgeWeighting all_y = [&] {
    std::string text;
    for (int e = 0; e < graph.host().edge_count(); ++e)
      text += "edge " + std::to_string(graph.host().edge_dart(e) + 1) + " = W\n";
    return EdgeWeighting::parse(text, graph.host());
  }();
  const Poly special = p_bar(graph, all_y, options).substitute({{"q", X * Y}, {"W", Y}, {"A", A * Y.pow(-1)}, {"B", B * Y}});
  InvariantContext ctx(graph);
  const Poly expected = X.pow(ctx.graph_components()) * Y.pow(graph.host().genus() + graph.graph_vertex_count()) *
                        p_bruteforce(graph, options);
  report.check_equal("Pbar(q=XY, v=Y, A/Y, BY) = X^c(G) Y^(g+v(G)) P_G", special, expected, witness);
  return report;
}

PolynomialReport verify_multivariate_duality(const CombinatorialMap& m, const EdgeWeighting& w, const EvalOptions& options) {
  PolynomialReport report;
  const std::string witness = serialize_map(m);
  const auto g = EmbeddedSubgraph::whole(m);
  const auto gd = EmbeddedSubgraph::whole(dual(m));
  const Poly A = Poly::variable("A"), B = Poly::variable("B");

  const Poly lhs = p_bar(gd, w, options);
  const Poly transported = p_bar(g, w.dual_weights(), options).substitute({{"A", B * kQ.pow(-1)}, {"B", A * kQ}});
  InvariantContext dual_ctx(gd);
  const int exponent = -m.genus() + dual_ctx.graph_components() - g.graph_vertex_count();
  const Poly rhs = kQ.pow(exponent) * weight_product(g, w) * transported;
  report.polynomials = {{"Pbar_G*", lhs}};
  report.check_equal("multivariate duality", lhs, rhs, witness);

  if (m.genus() == 0) {
    InvariantContext ctx(g);
    const Poly z_dual = multivariate_tutte(gd, w, options);
    const Poly z = multivariate_tutte(g, w.dual_weights(), options);
    const Poly planar = kQ.pow(ctx.graph_components() - g.graph_vertex_count()) * weight_product(g, w) * z;
    report.check_equal("planar relation Z_G*(q,v) = q^(c-v) (prod v) Z_G(q,q/v)", z_dual, planar, witness);
    const Poly one(1);
    report.check_equal("planar relation from the surface relation at A=B=1",
                       lhs.substitute({{"A", one}, {"B", one}}), rhs.substitute({{"A", one}, {"B", one}}), witness);
  }
  return report;
}

}  // namespace surftutte
