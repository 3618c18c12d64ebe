#include "surftutte/map.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "surftutte/error.hpp"

namespace surftutte {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

CombinatorialMap::CombinatorialMap(std::vector<int> sigma, std::vector<int> alpha, int isolated)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), isolated_(isolated) {
  const auto n = sigma_.size();
  if (alpha_.size() != n)
    throw Error(ErrorCode::DanglingDart, "sigma and alpha act on different dart sets");
  if (isolated_ < 0) throw Error(ErrorCode::MalformedInput, "negative isolated vertex count");
  sigma_inv_.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    int s = sigma_[d];
    if (s < 0 || static_cast<std::size_t>(s) >= n || sigma_inv_[static_cast<std::size_t>(s)] != -1)
      throw Error(ErrorCode::MalformedPermutation, "sigma is not a bijection");
    sigma_inv_[static_cast<std::size_t>(s)] = static_cast<int>(d);
  }
  for (std::size_t d = 0; d < n; ++d) {
    int a = alpha_[d];
    if (a < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(a) == d ||
        alpha_[static_cast<std::size_t>(a)] != static_cast<int>(d))
      throw Error(ErrorCode::AlphaNotInvolution, "alpha is not a fixed-point-free involution");
  }
  build();
}

void CombinatorialMap::build() {
  const int n = dart_count();
  vertex_of_.assign(static_cast<std::size_t>(n), -1);
  face_of_.assign(static_cast<std::size_t>(n), -1);
  edge_of_.assign(static_cast<std::size_t>(n), -1);
  vertex_darts_.clear();
  face_darts_.clear();
  edge_dart_.clear();
  for (int d = 0; d < n; ++d) {
    if (vertex_of_[static_cast<std::size_t>(d)] < 0) {
      std::vector<int> orbit;
      int x = d;
      do {
        vertex_of_[static_cast<std::size_t>(x)] = static_cast<int>(vertex_darts_.size());
        orbit.push_back(x);
        x = sigma(x);
      } while (x != d);
      vertex_darts_.push_back(std::move(orbit));
    }
    if (face_of_[static_cast<std::size_t>(d)] < 0) {
      std::vector<int> orbit;
      int x = d;
      do {
        face_of_[static_cast<std::size_t>(x)] = static_cast<int>(face_darts_.size());
        orbit.push_back(x);
        x = phi(x);
      } while (x != d);
      face_darts_.push_back(std::move(orbit));
    }
    if (d < alpha(d)) {
      edge_of_[static_cast<std::size_t>(d)] = edge_of_[static_cast<std::size_t>(alpha(d))] =
          static_cast<int>(edge_dart_.size());
      edge_dart_.push_back(d);
    }
  }

  UnionFind uf(n);
  for (int d = 0; d < n; ++d) {
    uf.unite(d, sigma(d));
    uf.unite(d, alpha(d));
  }
  std::vector<int> comp_of_root(static_cast<std::size_t>(n), -1);
  int comps = 0;
  std::vector<int> comp_of_dart(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    int r = uf.find(d);
    if (comp_of_root[static_cast<std::size_t>(r)] < 0) comp_of_root[static_cast<std::size_t>(r)] = comps++;
    comp_of_dart[static_cast<std::size_t>(d)] = comp_of_root[static_cast<std::size_t>(r)];
  }
  component_of_vertex_.clear();
  for (const auto& orbit : vertex_darts_) component_of_vertex_.push_back(comp_of_dart[static_cast<std::size_t>(orbit[0])]);
  component_of_face_.clear();
  for (const auto& orbit : face_darts_) component_of_face_.push_back(comp_of_dart[static_cast<std::size_t>(orbit[0])]);
  for (int i = 0; i < isolated_; ++i) {
    component_of_vertex_.push_back(comps + i);
    component_of_face_.push_back(comps + i);
  }
  component_edges_.assign(static_cast<std::size_t>(comps + isolated_), 0);
  for (int e = 0; e < edge_count(); ++e) ++component_edges_[static_cast<std::size_t>(comp_of_dart[static_cast<std::size_t>(edge_dart(e))])];
  component_total_ = comps + isolated_;
}

const std::vector<int>& CombinatorialMap::vertex_darts(int v) const {
  static const std::vector<int> kEmpty;
  if (v >= static_cast<int>(vertex_darts_.size())) return kEmpty;
  return vertex_darts_[static_cast<std::size_t>(v)];
}

const std::vector<int>& CombinatorialMap::face_darts(int f) const {
  static const std::vector<int> kEmpty;
  if (f >= static_cast<int>(face_darts_.size())) return kEmpty;
  return face_darts_[static_cast<std::size_t>(f)];
}

std::vector<int> CombinatorialMap::component_genera() const {
  std::vector<int> v(static_cast<std::size_t>(component_total_), 0), f = v;
  for (int i = 0; i < vertex_count(); ++i) ++v[static_cast<std::size_t>(component_of_vertex(i))];
  for (int i = 0; i < face_count(); ++i) ++f[static_cast<std::size_t>(component_of_face(i))];
  std::vector<int> genera;
  for (int c = 0; c < component_total_; ++c) {
    int twice = 2 - v[static_cast<std::size_t>(c)] + component_edges_[static_cast<std::size_t>(c)] - f[static_cast<std::size_t>(c)];
    if (twice < 0 || twice % 2 != 0)
      throw Error(ErrorCode::InternalEulerParity, "component " + std::to_string(c) + " has 2g = " + std::to_string(twice));
    genera.push_back(twice / 2);
  }
  return genera;
}

int CombinatorialMap::genus() const {
  auto g = component_genera();
  return std::accumulate(g.begin(), g.end(), 0);
}

// ---------------------------------------------------------------------------

EmbeddedSubgraph::EmbeddedSubgraph(CombinatorialMap host, std::vector<bool> vertices, std::vector<bool> edges)
    : host_(std::move(host)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.size() != static_cast<std::size_t>(host_.vertex_count()) ||
      edges_.size() != static_cast<std::size_t>(host_.edge_count()))
    throw Error(ErrorCode::MalformedInput, "subgraph masks do not match the host map");
  for (int e = 0; e < host_.edge_count(); ++e)
    if (edges_[static_cast<std::size_t>(e)] && (!has_vertex(host_.edge_tail(e)) || !has_vertex(host_.edge_head(e))))
      throw Error(ErrorCode::MalformedInput,
                  "graph edge " + std::to_string(host_.edge_dart(e) + 1) + " has an endpoint outside the graph");
}

EmbeddedSubgraph EmbeddedSubgraph::whole(CombinatorialMap host) {
  std::vector<bool> v(static_cast<std::size_t>(host.vertex_count()), true);
  std::vector<bool> e(static_cast<std::size_t>(host.edge_count()), true);
  return EmbeddedSubgraph(std::move(host), std::move(v), std::move(e));
}

std::vector<int> EmbeddedSubgraph::graph_edges() const {
  std::vector<int> out;
  for (int e = 0; e < host_.edge_count(); ++e)
    if (has_edge(e)) out.push_back(e);
  return out;
}

int EmbeddedSubgraph::graph_vertex_count() const {
  return static_cast<int>(std::count(vertices_.begin(), vertices_.end(), true));
}

int EmbeddedSubgraph::graph_edge_count() const {
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), true));
}

bool EmbeddedSubgraph::is_cellulation() const {
  return graph_vertex_count() == host_.vertex_count() && graph_edge_count() == host_.edge_count();
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (!comment) out += c == ',' ? ' ' : c;
  }
  return out;
}

std::vector<std::vector<long>> parse_cycles(const std::string& body, const char* what) {
  std::vector<std::vector<long>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  skip();
  while (i < body.size()) {
    if (body[i] != '(')
      throw Error(ErrorCode::MalformedPermutation, std::string(what) + ": expected '(' in '" + body + "'");
    ++i;
    std::vector<long> cycle;
    while (true) {
      skip();
      if (i >= body.size())
        throw Error(ErrorCode::MalformedPermutation, std::string(what) + ": unterminated cycle");
      if (body[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
      if (start == i)
        throw Error(ErrorCode::MalformedPermutation, std::string(what) + ": expected dart id in '" + body + "'");
      cycle.push_back(std::stol(body.substr(start, i - start)));
      if (cycle.back() < 1) throw Error(ErrorCode::MalformedPermutation, "dart ids start at 1");
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip();
  }
  return cycles;
}

std::vector<long> parse_id_list(const std::string& body, bool& all) {
  std::istringstream in(body);
  std::vector<long> ids;
  std::string tok;
  all = false;
  while (in >> tok) {
    if (tok == "*") {
      all = true;
      continue;
    }
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      ids.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, "bad id '" + tok + "'");
    }
  }
  if (all && !ids.empty()) throw Error(ErrorCode::MalformedInput, "'*' cannot be combined with ids");
  if (!all && ids.empty() && body.find_first_not_of(" \t\r\n") == std::string::npos) all = false;
  return ids;
}

}  // namespace

EmbeddedSubgraph parse_map(std::string_view text) {
  const std::string clean = strip_comments(text);
  static const std::regex key(R"((sigma|alpha|isolated|graph_vertices|graph_edges)\s*:)");
  std::map<std::string, std::string> fields;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> hits;
  for (auto it = std::sregex_iterator(clean.begin(), clean.end(), key); it != std::sregex_iterator(); ++it)
    hits.push_back({(*it)[1].str(), {static_cast<std::size_t>(it->position()), static_cast<std::size_t>(it->position() + it->length())}});
  if (hits.empty() || clean.substr(0, hits[0].second.first).find_first_not_of(" \t\r\n") != std::string::npos)
    throw Error(ErrorCode::MalformedInput, "map text must start with a 'sigma:' field");
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::size_t end = i + 1 < hits.size() ? hits[i + 1].second.first : clean.size();
    if (fields.count(hits[i].first)) throw Error(ErrorCode::MalformedInput, "duplicate field " + hits[i].first);
    fields[hits[i].first] = clean.substr(hits[i].second.second, end - hits[i].second.second);
  }
  if (!fields.count("sigma") || !fields.count("alpha"))
    throw Error(ErrorCode::MalformedInput, "map needs both sigma and alpha");

  auto sigma_cycles = parse_cycles(fields["sigma"], "sigma");
  auto alpha_cycles = parse_cycles(fields["alpha"], "alpha");
  long max_dart = 0;
  for (const auto& c : sigma_cycles)
    for (long d : c) max_dart = std::max(max_dart, d);
  for (const auto& c : alpha_cycles)
    for (long d : c) max_dart = std::max(max_dart, d);
  if (max_dart > 1'000'000) throw Error(ErrorCode::MalformedPermutation, "dart id too large");
  const auto n = static_cast<std::size_t>(max_dart);

  std::vector<int> sigma(n, -1), alpha(n, -1);
  std::vector<bool> in_sigma(n, false), in_alpha(n, false);
  for (const auto& c : sigma_cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto d = static_cast<std::size_t>(c[i] - 1);
      if (in_sigma[d]) throw Error(ErrorCode::MalformedPermutation, "dart " + std::to_string(c[i]) + " repeated in sigma");
      in_sigma[d] = true;
      sigma[d] = static_cast<int>(c[(i + 1) % c.size()] - 1);
    }
  }
  for (const auto& c : alpha_cycles) {
    if (c.size() != 2) throw Error(ErrorCode::AlphaNotInvolution, "alpha cycles must have length 2");
    for (long d : c) {
      if (in_alpha[static_cast<std::size_t>(d - 1)])
        throw Error(ErrorCode::AlphaNotInvolution, "dart " + std::to_string(d) + " repeated in alpha");
      in_alpha[static_cast<std::size_t>(d - 1)] = true;
    }
    if (c[0] == c[1]) throw Error(ErrorCode::AlphaNotInvolution, "alpha has a fixed point");
    alpha[static_cast<std::size_t>(c[0] - 1)] = static_cast<int>(c[1] - 1);
    alpha[static_cast<std::size_t>(c[1] - 1)] = static_cast<int>(c[0] - 1);
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (in_sigma[d] != in_alpha[d])
      throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d + 1) + " appears in only one of sigma/alpha");
    if (!in_sigma[d]) throw Error(ErrorCode::MalformedPermutation, "dart ids must be 1..2m without gaps");
  }

  int isolated = 0;
  if (fields.count("isolated")) {
    bool all = false;
    auto ids = parse_id_list(fields["isolated"], all);
    if (all || ids.size() != 1 || ids[0] < 0) throw Error(ErrorCode::MalformedInput, "isolated: expects one count");
    isolated = static_cast<int>(ids[0]);
  }
  CombinatorialMap host(std::move(sigma), std::move(alpha), isolated);

  std::vector<bool> vmask(static_cast<std::size_t>(host.vertex_count()), true);
  std::vector<bool> emask(static_cast<std::size_t>(host.edge_count()), true);
  if (fields.count("graph_vertices")) {
    bool all = false;
    auto ids = parse_id_list(fields["graph_vertices"], all);
    if (!all) {
      std::fill(vmask.begin(), vmask.end(), false);
      for (long id : ids) {
        long d = id - 1;
        int v = -1;
        if (d >= 0 && d < host.dart_count() && host.vertex_darts(host.vertex_of(static_cast<int>(d)))[0] == d)
          v = host.vertex_of(static_cast<int>(d));
        else if (d >= host.dart_count() && d < host.dart_count() + isolated)
          v = host.vertex_count() - isolated + static_cast<int>(d - host.dart_count());
        if (v < 0) throw Error(ErrorCode::MalformedInput, "no vertex with id " + std::to_string(id));
        vmask[static_cast<std::size_t>(v)] = true;
      }
    }
  }
  if (fields.count("graph_edges")) {
    bool all = false;
    auto ids = parse_id_list(fields["graph_edges"], all);
    if (!all) {
      std::fill(emask.begin(), emask.end(), false);
      for (long id : ids) {
        long d = id - 1;
        if (d < 0 || d >= host.dart_count() || host.alpha(static_cast<int>(d)) < d)
          throw Error(ErrorCode::MalformedInput, "no edge with id " + std::to_string(id));
        emask[static_cast<std::size_t>(host.edge_of(static_cast<int>(d)))] = true;
      }
    }
  }
  return EmbeddedSubgraph(std::move(host), std::move(vmask), std::move(emask));
}

EmbeddedSubgraph load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_map(ss.str());
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t d = 0; d < perm.size(); ++d) {
    if (seen[d]) continue;
    out += '(';
    std::size_t x = d;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string serialize_map(const EmbeddedSubgraph& s) {
  const auto& m = s.host();
  std::string out;
  out += "sigma: " + cycle_notation(m.sigma_perm()) + "\n";
  out += "alpha: " + cycle_notation(m.alpha_perm()) + "\n";
  out += "isolated: " + std::to_string(m.isolated_vertices()) + "\n";
  out += "graph_vertices:";
  if (s.graph_vertex_count() == m.vertex_count()) {
    out += " *";
  } else {
    for (int v = 0; v < m.vertex_count(); ++v) {
      if (!s.has_vertex(v)) continue;
      int id = v < m.vertex_count() - m.isolated_vertices()
                   ? m.vertex_darts(v)[0] + 1
                   : m.dart_count() + (v - (m.vertex_count() - m.isolated_vertices())) + 1;
      out += " " + std::to_string(id);
    }
  }
  out += "\ngraph_edges:";
  if (s.graph_edge_count() == m.edge_count()) {
    out += " *";
  } else {
    for (int e : s.graph_edges()) out += " " + std::to_string(m.edge_dart(e) + 1);
  }
  out += "\n";
  return out;
}

std::string serialize_map(const CombinatorialMap& m) { return serialize_map(EmbeddedSubgraph::whole(m)); }

// ---------------------------------------------------------------------------
// Structural operations

CombinatorialMap dual(const CombinatorialMap& m) {
  // Faces are traced clockwise by phi, so the counterclockwise rotation around
  // a dual vertex is phi^-1.
  std::vector<int> rot(static_cast<std::size_t>(m.dart_count()));
  for (int d = 0; d < m.dart_count(); ++d) rot[static_cast<std::size_t>(m.phi(d))] = d;
  return CombinatorialMap(std::move(rot), m.alpha_perm(), m.isolated_vertices());
}

CombinatorialMap disjoint_union(const CombinatorialMap& a, const CombinatorialMap& b) {
  std::vector<int> sigma = a.sigma_perm(), alpha = a.alpha_perm();
  const int shift = a.dart_count();
  for (int d = 0; d < b.dart_count(); ++d) {
    sigma.push_back(b.sigma(d) + shift);
    alpha.push_back(b.alpha(d) + shift);
  }
  return CombinatorialMap(std::move(sigma), std::move(alpha), a.isolated_vertices() + b.isolated_vertices());
}

std::vector<CombinatorialMap> components(const CombinatorialMap& m) {
  const int with_darts = m.component_count() - m.isolated_vertices();
  std::vector<std::vector<int>> darts(static_cast<std::size_t>(with_darts));
  for (int d = 0; d < m.dart_count(); ++d)
    darts[static_cast<std::size_t>(m.component_of_vertex(m.vertex_of(d)))].push_back(d);
  std::vector<CombinatorialMap> out;
  std::vector<int> local(static_cast<std::size_t>(m.dart_count()));
  for (const auto& ds : darts) {
    for (std::size_t i = 0; i < ds.size(); ++i) local[static_cast<std::size_t>(ds[i])] = static_cast<int>(i);
    std::vector<int> sigma, alpha;
    for (int d : ds) {
      sigma.push_back(local[static_cast<std::size_t>(m.sigma(d))]);
      alpha.push_back(local[static_cast<std::size_t>(m.alpha(d))]);
    }
    out.emplace_back(std::move(sigma), std::move(alpha), 0);
  }
  for (int i = 0; i < m.isolated_vertices(); ++i) out.emplace_back(std::vector<int>{}, std::vector<int>{}, 1);
  return out;
}

EmbeddedSubgraph delete_edge(const EmbeddedSubgraph& s, int edge) {
  if (edge < 0 || edge >= s.host().edge_count() || !s.has_edge(edge))
    throw Error(ErrorCode::EdgeNotInGraph, "edge index " + std::to_string(edge));
  auto edges = s.edge_mask();
  edges[static_cast<std::size_t>(edge)] = false;
  return EmbeddedSubgraph(s.host(), s.vertex_mask(), std::move(edges));
}

Contraction contract_edge_tracked(const EmbeddedSubgraph& s, int edge) {
  const auto& m = s.host();
  if (edge < 0 || edge >= m.edge_count() || !s.has_edge(edge))
    throw Error(ErrorCode::EdgeNotInGraph, "edge index " + std::to_string(edge));
  if (m.is_loop(edge)) throw Error(ErrorCode::LoopContraction, "edge " + std::to_string(m.edge_dart(edge) + 1) + " is a loop");

  const int d = m.edge_dart(edge), dd = m.alpha(d);
  std::vector<int> merged;
  for (int x = m.sigma(d); x != d; x = m.sigma(x)) merged.push_back(x);
  for (int x = m.sigma(dd); x != dd; x = m.sigma(x)) merged.push_back(x);

  const int n = m.dart_count();
  std::vector<int> dart_map(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (x != d && x != dd) dart_map[static_cast<std::size_t>(x)] = next++;

  std::vector<int> sigma(static_cast<std::size_t>(next)), alpha(static_cast<std::size_t>(next));
  for (int x = 0; x < n; ++x) {
    if (x == d || x == dd) continue;
    sigma[static_cast<std::size_t>(dart_map[static_cast<std::size_t>(x)])] = dart_map[static_cast<std::size_t>(m.sigma(x))];
    alpha[static_cast<std::size_t>(dart_map[static_cast<std::size_t>(x)])] = dart_map[static_cast<std::size_t>(m.alpha(x))];
  }
  for (std::size_t i = 0; i < merged.size(); ++i)
    sigma[static_cast<std::size_t>(dart_map[static_cast<std::size_t>(merged[i])])] =
        dart_map[static_cast<std::size_t>(merged[(i + 1) % merged.size()])];

  const bool becomes_isolated = merged.empty();
  CombinatorialMap host(std::move(sigma), std::move(alpha), m.isolated_vertices() + (becomes_isolated ? 1 : 0));

  std::vector<bool> vmask(static_cast<std::size_t>(host.vertex_count()), false);
  const int old_dart_vertices = m.vertex_count() - m.isolated_vertices();
  const int new_dart_vertices = host.vertex_count() - host.isolated_vertices();
  for (int v = 0; v < old_dart_vertices; ++v) {
    if (!s.has_vertex(v)) continue;
    if (v == m.vertex_of(d) || v == m.vertex_of(dd)) continue;
    vmask[static_cast<std::size_t>(host.vertex_of(dart_map[static_cast<std::size_t>(m.vertex_darts(v)[0])]))] = true;
  }
  if (becomes_isolated)
    vmask[static_cast<std::size_t>(host.vertex_count() - 1)] = true;
  else
    vmask[static_cast<std::size_t>(host.vertex_of(dart_map[static_cast<std::size_t>(merged[0])]))] = true;
  for (int i = 0; i < m.isolated_vertices(); ++i)
    vmask[static_cast<std::size_t>(new_dart_vertices + i)] = s.has_vertex(old_dart_vertices + i);

  std::vector<bool> emask(static_cast<std::size_t>(host.edge_count()), false);
  for (int e = 0; e < m.edge_count(); ++e)
    if (e != edge && s.has_edge(e))
      emask[static_cast<std::size_t>(host.edge_of(dart_map[static_cast<std::size_t>(m.edge_dart(e))]))] = true;

  return {EmbeddedSubgraph(std::move(host), std::move(vmask), std::move(emask)), std::move(dart_map)};
}

EmbeddedSubgraph contract_edge(const EmbeddedSubgraph& s, int edge) { return contract_edge_tracked(s, edge).result; }

// ---------------------------------------------------------------------------
// Canonical codes

namespace {

// Breadth-first relabeling from `root`; the trace lists, per dart in label
// order, the labels of its sigma and alpha images and its mark.
void trace_from(const CombinatorialMap& m, const std::vector<int>& marks, int root, std::vector<int>& label,
                std::vector<int>& order, std::vector<int>& out) {
  for (int x : order) label[static_cast<std::size_t>(x)] = -1;
  order.clear();
  label[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  out.clear();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int x = order[i];
    for (int y : {m.sigma(x), m.alpha(x)}) {
      if (label[static_cast<std::size_t>(y)] < 0) {
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
    out.push_back(label[static_cast<std::size_t>(m.sigma(x))]);
    out.push_back(label[static_cast<std::size_t>(m.alpha(x))]);
    out.push_back(marks[static_cast<std::size_t>(x)]);
  }
}

}  // namespace

std::string canonical_code(const EmbeddedSubgraph& s) {
  const auto& m = s.host();
  const int n = m.dart_count();
  std::vector<int> marks(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d)
    marks[static_cast<std::size_t>(d)] = (s.has_edge(m.edge_of(d)) ? 2 : 0) + (s.has_vertex(m.vertex_of(d)) ? 1 : 0);

  const int with_darts = m.component_count() - m.isolated_vertices();
  std::vector<std::vector<int>> comp_darts(static_cast<std::size_t>(with_darts));
  for (int d = 0; d < n; ++d) comp_darts[static_cast<std::size_t>(m.component_of_vertex(m.vertex_of(d)))].push_back(d);

  std::vector<int> label(static_cast<std::size_t>(n), -1), order, trace, best;
  std::vector<std::vector<int>> codes;
  for (const auto& ds : comp_darts) {
    best.clear();
    for (int root : ds) {
      trace_from(m, marks, root, label, order, trace);
      if (best.empty() || trace < best) best = trace;
    }
    codes.push_back(best);
  }
  std::sort(codes.begin(), codes.end());

  int marked_isolated = 0;
  for (int i = 0; i < m.isolated_vertices(); ++i)
    if (s.has_vertex(m.vertex_count() - m.isolated_vertices() + i)) ++marked_isolated;

  std::string out;
  auto put = [&out](int v) {
    out += static_cast<char>((v >> 16) & 0xff);
    out += static_cast<char>((v >> 8) & 0xff);
    out += static_cast<char>(v & 0xff);
  };
  put(marked_isolated);
  put(m.isolated_vertices() - marked_isolated);
  put(static_cast<int>(codes.size()));
  for (const auto& c : codes) {
    put(static_cast<int>(c.size()));
    for (int v : c) put(v);
  }
  return out;
}

std::string canonical_code(const CombinatorialMap& m) { return canonical_code(EmbeddedSubgraph::whole(m)); }

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

}  // namespace surftutte
