#include "surftutte/links.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <regex>
#include <sstream>

#include "surftutte/error.hpp"
#include "surftutte/invariants.hpp"
#include "surftutte/surface_tutte.hpp"

namespace surftutte {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

Poly u_power(int e) { return Poly::monomial(1, {{"u", e}}); }

Poly loop_value_u() { return -(u_power(2) + u_power(-2)); }

// Edge chain of a closed walk; throws if consecutive darts do not meet.
Vector walk_chain(const CombinatorialMap& m, const std::vector<int>& walk) {
  if (walk.empty()) throw Error(ErrorCode::MalformedInput, "empty loop");
  Vector chain(at(m.edge_count()));
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const int d = walk[i];
    if (d < 0 || d >= m.dart_count()) throw Error(ErrorCode::MalformedInput, "loop dart out of range");
    const int next = walk[(i + 1) % walk.size()];
    if (next < 0 || next >= m.dart_count() || m.vertex_of(m.alpha(d)) != m.vertex_of(next))
      throw Error(ErrorCode::MalformedInput, "loop darts do not form a closed walk");
    chain[at(m.edge_of(d))] += m.dart_sign(d);
  }
  return chain;
}

std::vector<int> parse_ints(const std::string& body, const char* what) {
  std::istringstream in(body);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 1 || v > 1'000'000) throw std::invalid_argument(tok);
      out.push_back(static_cast<int>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, std::string(what) + ": bad id '" + tok + "'");
    }
  }
  return out;
}

int parse_count(const std::string& body, const char* what) {
  std::istringstream in(body);
  long v = -1;
  std::string rest;
  if (!(in >> v) || (in >> rest) || v < 0 || v > 1'000'000)
    throw Error(ErrorCode::MalformedInput, std::string(what) + ": expects one non-negative count");
  return static_cast<int>(v);
}

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

template <class Key, class Fn>
std::map<Key, std::uint64_t> accumulate_states(const StateEnumerator& en, Fn&& key, bool parallel) {
  std::map<Key, std::uint64_t> hist;
  const auto total = static_cast<std::int64_t>(en.state_count());
  if (!parallel || total < 256) {
    for (std::int64_t i = 0; i < total; ++i) ++hist[key(en.state(static_cast<std::uint64_t>(i)))];
    return hist;
  }
#pragma omp parallel
  {
    std::map<Key, std::uint64_t> local;
#pragma omp for schedule(static, 64) nowait
    for (std::int64_t i = 0; i < total; ++i) ++local[key(en.state(static_cast<std::uint64_t>(i)))];
#pragma omp critical(surftutte_state_merge)
    for (const auto& [k, count] : local) hist[k] += count;
  }
  return hist;
}

// Region colouring: 0/1 per face of the base map.
std::vector<int> checkerboard(const CombinatorialMap& m) {
  std::vector<int> colour(at(m.face_count()), -1);
  for (int start = 0; start < m.face_count(); ++start) {
    if (colour[at(start)] >= 0) continue;
    colour[at(start)] = 0;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      for (int d : m.face_darts(f)) {
        const int other = m.face_of(m.alpha(d));
        if (colour[at(other)] < 0) {
          colour[at(other)] = 1 - colour[at(f)];
          todo.push(other);
        } else if (colour[at(other)] == colour[at(f)]) {
          throw Error(ErrorCode::NotCheckerboardColorable,
                      "regions on both sides of dart " + std::to_string(d + 1) + " get the same colour");
        }
      }
    }
  }
  return colour;
}

// Corner x is the sector between x and sigma(x); it lies in the face of alpha(x).
int corner_face(const CombinatorialMap& m, int x) { return m.face_of(m.alpha(x)); }

// Chain from the first vertex of the face containing corner x to the crossing of x,
// along the face boundary.
Vector corner_path(const CombinatorialMap& m, int x) {
  Vector chain(at(m.edge_count()));
  const int y = m.alpha(x);
  for (int z : m.face_darts(m.face_of(y))) {
    chain[at(m.edge_of(z))] += m.dart_sign(z);
    if (z == y) break;
  }
  return chain;
}

std::string state_witness(const std::string& diagram, std::uint64_t choice) {
  return diagram + "state: " + std::to_string(choice) + "\n";
}

}  // namespace

// ---------------------------------------------------------------------------

LinkDiagram::LinkDiagram(CombinatorialMap base, const std::vector<int>& over_darts) : base_(std::move(base)) {
  if (base_.isolated_vertices() != 0) throw Error(ErrorCode::NotFourValent, "isolated vertex in a crossing diagram");
  const int n = base_.vertex_count();
  if (static_cast<int>(over_darts.size()) != n)
    throw Error(ErrorCode::MalformedInput, "one over dart per crossing expected");
  position_.assign(at(base_.dart_count()), -1);
  for (int v = 0; v < n; ++v) {
    const auto& darts = base_.vertex_darts(v);
    if (darts.size() != 4)
      throw Error(ErrorCode::NotFourValent, "crossing with " + std::to_string(darts.size()) + " darts");
    const int o = over_darts[at(v)];
    if (o < 0 || o >= base_.dart_count() || base_.vertex_of(o) != v)
      throw Error(ErrorCode::MalformedInput, "over dart not at its crossing");
    const int d0 = std::min(o, base_.sigma(base_.sigma(o)));
    std::array<int, 4> c{d0, base_.sigma(d0), base_.sigma(base_.sigma(d0)), base_.sigma_inv(d0)};
    for (int i = 0; i < 4; ++i) position_[at(c[at(i)])] = i;
    crossings_.push_back(c);
  }
}

LinkDiagram LinkDiagram::crossingless(CombinatorialMap surface, int free_loops,
                                      const std::vector<std::vector<int>>& walks) {
  LinkDiagram d;
  d.base_ = std::move(surface);
  d.free_loops_ = free_loops;
  d.walks_ = walks;
  for (const auto& w : walks) d.surface_loops_.push_back(walk_chain(d.base_, w));
  if (free_loops < 0) throw Error(ErrorCode::MalformedInput, "negative loop count");
  return d;
}

std::vector<std::vector<int>> LinkDiagram::strands() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(at(base_.dart_count()), 0);
  for (int start = 0; start < base_.dart_count(); ++start) {
    if (seen[at(start)]) continue;
    std::vector<int> orbit;
    int x = start;
    do {
      orbit.push_back(x);
      seen[at(x)] = 1;
      x = base_.sigma(base_.sigma(base_.alpha(x)));
    } while (x != start);
    for (int y : orbit) {
      if (seen[at(base_.alpha(y))] && std::find(orbit.begin(), orbit.end(), base_.alpha(y)) != orbit.end())
        throw Error(ErrorCode::MalformedInput, "strand runs through itself in both directions");
      seen[at(base_.alpha(y))] = 1;
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

void LinkDiagram::set_orientation(std::vector<int> leading_darts) {
  const auto comps = strands();
  std::vector<int> comp_of(at(base_.dart_count()), -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int x : comps[i]) {
      comp_of[at(x)] = static_cast<int>(i);
      comp_of[at(base_.alpha(x))] = static_cast<int>(i);
    }
  std::vector<char> used(comps.size(), 0);
  for (int d : leading_darts) {
    if (d < 0 || d >= base_.dart_count()) throw Error(ErrorCode::MalformedInput, "orientation dart out of range");
    auto& u = used[at(comp_of[at(d)])];
    if (u) throw Error(ErrorCode::MalformedInput, "two orientation darts on one strand");
    u = 1;
  }
  orientation_ = std::move(leading_darts);
}

bool LinkDiagram::is_oriented() const {
  return static_cast<int>(orientation_.size()) == static_cast<int>(strands().size());
}

void LinkDiagram::orient_default() {
  std::vector<int> lead;
  for (const auto& s : strands()) lead.push_back(s.front());
  orientation_ = std::move(lead);
}

// ---------------------------------------------------------------------------

LinkDiagram parse_diagram(std::string_view text) {
  const std::string clean = strip_comments(text);
  static const std::regex key(
      R"((^|\n)[ \t\r]*(crossing[ \t]+[^:\s]+|alpha|orient|free|surface_sigma|surface_alpha|surface_isolated|loop)[ \t]*:)");
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> hits;
  for (auto it = std::sregex_iterator(clean.begin(), clean.end(), key); it != std::sregex_iterator(); ++it)
    hits.push_back({(*it)[2].str(),
                    {static_cast<std::size_t>(it->position() + (*it)[1].length()),
                     static_cast<std::size_t>(it->position() + it->length())}});
  const std::size_t first = hits.empty() ? clean.size() : hits[0].second.first;
  if (clean.substr(0, first).find_first_not_of(" \t\r\n") != std::string::npos)
    throw Error(ErrorCode::MalformedInput, "unrecognised text before the first field");
  if (hits.empty()) throw Error(ErrorCode::MalformedInput, "empty diagram");

  std::vector<std::pair<std::string, std::string>> crossing_lines;
  std::map<std::string, std::string> fields;
  std::vector<std::string> loops;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const std::size_t end = i + 1 < hits.size() ? hits[i + 1].second.first : clean.size();
    std::string body = clean.substr(hits[i].second.second, end - hits[i].second.second);
    const std::string& name = hits[i].first;
    if (name.rfind("crossing", 0) == 0) {
      crossing_lines.push_back({name.substr(name.find_last_of(" \t") + 1), body});
    } else if (name == "loop") {
      loops.push_back(body);
    } else {
      if (fields.count(name)) throw Error(ErrorCode::MalformedInput, "duplicate field " + name);
      fields[name] = body;
    }
  }
  const int free = fields.count("free") ? parse_count(fields["free"], "free") : 0;

  if (crossing_lines.empty()) {
    if (fields.count("alpha") || fields.count("orient"))
      throw Error(ErrorCode::MalformedInput, "alpha/orient need crossings");
    CombinatorialMap surface({}, {}, 1);
    if (fields.count("surface_sigma") || fields.count("surface_alpha")) {
      std::string map_text = "sigma: " + fields["surface_sigma"] + "\nalpha: " + fields["surface_alpha"] + "\n";
      if (fields.count("surface_isolated")) map_text += "isolated: " + fields["surface_isolated"] + "\n";
      surface = parse_map(map_text).host();
    } else if (fields.count("surface_isolated")) {
      surface = CombinatorialMap({}, {}, parse_count(fields["surface_isolated"], "surface_isolated"));
    }
    std::vector<std::vector<int>> walks;
    for (const auto& body : loops) {
      auto ids = parse_ints(body, "loop");
      for (int& x : ids) --x;
      walks.push_back(std::move(ids));
    }
    if (free == 0 && walks.empty()) throw Error(ErrorCode::MalformedInput, "diagram has no components");
    return LinkDiagram::crossingless(std::move(surface), free, walks);
  }
  if (!loops.empty() || fields.count("surface_sigma") || fields.count("surface_alpha") || fields.count("surface_isolated"))
    throw Error(ErrorCode::MalformedInput, "surface/loop fields are for crossingless diagrams only");
  if (!fields.count("alpha")) throw Error(ErrorCode::MalformedInput, "crossing diagram needs an alpha field");

  static const std::regex crossing_body(R"(^\s*darts\s*\(([^)]*)\)\s*over\s*\(([^)]*)\)\s*$)");
  const int n = static_cast<int>(crossing_lines.size());
  const int darts = 4 * n;
  std::vector<int> sigma(at(darts), -1), alpha(at(darts), -1), over;
  std::vector<std::array<int, 4>> rotations;
  for (const auto& [label, body] : crossing_lines) {
    std::smatch mt;
    if (!std::regex_match(body, mt, crossing_body))
      throw Error(ErrorCode::MalformedInput, "crossing " + label + ": expected 'darts (a b c d) over (a c)'");
    const auto rot = parse_ints(mt[1].str(), "darts");
    const auto ov = parse_ints(mt[2].str(), "over");
    if (rot.size() != 4)
      throw Error(ErrorCode::NotFourValent, "crossing " + label + " has " + std::to_string(rot.size()) + " darts");
    if (ov.size() != 2) throw Error(ErrorCode::MalformedInput, "crossing " + label + ": over needs two darts");
    for (int i = 0; i < 4; ++i) {
      const int d = rot[at(i)] - 1;
      if (d >= darts) throw Error(ErrorCode::MalformedPermutation, "dart ids must be 1.." + std::to_string(darts));
      if (sigma[at(d)] >= 0) throw Error(ErrorCode::MalformedPermutation, "dart " + std::to_string(d + 1) + " repeated");
      sigma[at(d)] = rot[at((i + 1) % 4)] - 1;
    }
    auto pos = [&](int id) {
      const auto it = std::find(rot.begin(), rot.end(), id);
      if (it == rot.end()) throw Error(ErrorCode::MalformedInput, "crossing " + label + ": over dart not in its rotation");
      return static_cast<int>(it - rot.begin());
    };
    if ((pos(ov[0]) + 2) % 4 != pos(ov[1]))
      throw Error(ErrorCode::OverPairNotOpposite, "crossing " + label + ": over darts are not opposite");
    over.push_back(ov[0] - 1);
  }
  std::string alpha_text = fields["alpha"];
  {
    std::string map_text = "sigma: ";
    for (int d = 0; d < darts; ++d) map_text += "(" + std::to_string(d + 1) + ")";
    map_text += "\nalpha: " + alpha_text + "\n";
    const CombinatorialMap pairing = parse_map(map_text).host();
    if (pairing.dart_count() != darts) throw Error(ErrorCode::DanglingDart, "alpha and crossings use different darts");
    for (int d = 0; d < darts; ++d) alpha[at(d)] = pairing.alpha(d);
  }
  CombinatorialMap base(std::move(sigma), std::move(alpha), 0);
  std::vector<int> over_by_vertex(at(n), -1);
  for (int o : over) over_by_vertex[at(base.vertex_of(o))] = o;
  LinkDiagram d(std::move(base), over_by_vertex);
  d.set_free_loops(free);
  if (fields.count("orient")) {
    auto lead = parse_ints(fields["orient"], "orient");
    for (int& x : lead) --x;
    d.set_orientation(std::move(lead));
  }
  return d;
}

LinkDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

std::string serialize_diagram(const LinkDiagram& d) {
  std::ostringstream out;
  const auto& m = d.base();
  if (d.crossing_count() == 0) {
    if (m.dart_count() > 0 || m.isolated_vertices() != 1) {
      out << "surface_sigma: " << cycle_notation(m.sigma_perm()) << "\n";
      out << "surface_alpha: " << cycle_notation(m.alpha_perm()) << "\n";
      if (m.isolated_vertices() > 0) out << "surface_isolated: " << m.isolated_vertices() << "\n";
    }
    for (const auto& w : d.surface_walks()) {
      out << "loop:";
      for (int x : w) out << ' ' << x + 1;
      out << "\n";
    }
  } else {
    for (int i = 0; i < d.crossing_count(); ++i) {
      const auto& c = d.crossing(i);
      out << "crossing " << i + 1 << ": darts (" << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << ' ' << c[3] + 1
          << ") over (" << c[0] + 1 << ' ' << c[2] + 1 << ")\n";
    }
    out << "alpha: " << cycle_notation(m.alpha_perm()) << "\n";
    if (!d.orientation().empty()) {
      out << "orient:";
      for (int x : d.orientation()) out << ' ' << x + 1;
      out << "\n";
    }
  }
  if (d.free_loops() > 0) out << "free: " << d.free_loops() << "\n";
  return out.str();
}

LinkDiagram switch_crossing(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) throw Error(ErrorCode::MalformedInput, "no such crossing");
  std::vector<int> over;
  for (int i = 0; i < d.crossing_count(); ++i) over.push_back(d.crossing(i)[i == crossing ? 1 : 0]);
  LinkDiagram out(d.base(), over);
  out.set_free_loops(d.free_loops());
  if (!d.orientation().empty()) out.set_orientation(d.orientation());
  return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d;
  std::vector<int> over;
  for (int i = 0; i < d.crossing_count(); ++i) over.push_back(d.crossing(i)[1]);
  LinkDiagram out(d.base(), over);
  out.set_free_loops(d.free_loops());
  if (!d.orientation().empty()) out.set_orientation(d.orientation());
  return out;
}

LinkDiagram medial_diagram(const CombinatorialMap& g) {
  if (g.isolated_vertices() != 0 || g.edge_count() == 0)
    throw Error(ErrorCode::MalformedInput, "medial diagram needs a map with edges and no isolated vertices");
  const int n = g.dart_count();
  std::vector<int> sigma(at(2 * n)), alpha(at(2 * n));
  for (int t = 0; t < n; ++t) {
    alpha[at(2 * t)] = 2 * t + 1;
    alpha[at(2 * t + 1)] = 2 * t;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const int d = g.edge_dart(e);
    const std::array<int, 4> rot{2 * d, 2 * g.sigma_inv(d) + 1, 2 * g.alpha(d), 2 * g.sigma_inv(g.alpha(d)) + 1};
    for (int i = 0; i < 4; ++i) sigma[at(rot[at(i)])] = rot[at((i + 1) % 4)];
  }
  CombinatorialMap base(std::move(sigma), std::move(alpha), 0);
  std::vector<int> over(at(base.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const int d = 2 * g.edge_dart(e);
    over[at(base.vertex_of(d))] = d;
  }
  LinkDiagram out(std::move(base), over);
  out.orient_default();
  return out;
}

LinkDiagram random_alternating_diagram(Rng& rng, int genus, int min_crossings, int max_crossings) {
  min_crossings = std::max({min_crossings, 2 * genus, 1});
  if (max_crossings < min_crossings)
    throw Error(ErrorCode::MalformedInput, "genus " + std::to_string(genus) + " needs at least " +
                                               std::to_string(min_crossings) + " crossings");
  while (true) {
    const CombinatorialMap g = random_map(rng, rng.between(min_crossings, max_crossings));
    if (g.genus() == genus && g.component_count() == 1 && g.isolated_vertices() == 0) return medial_diagram(g);
  }
}

// ---------------------------------------------------------------------------

StateEnumerator::StateEnumerator(const LinkDiagram& d, int cap) : diagram_(d), homology_(d.base()) {
  if (d.crossing_count() > cap)
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(d.crossing_count()) + " crossings exceed the cap of " + std::to_string(cap));
  if (d.crossing_count() > 62) throw Error(ErrorCode::TooManyCrossings, "state masks are limited to 62 crossings");
}

ResolutionState StateEnumerator::state(std::uint64_t choice) const {
  const auto& d = diagram_;
  const auto& m = d.base();
  const int n = d.crossing_count();
  ResolutionState s;
  s.choice = choice;
  Matrix classes(0, homology_.dimension());
  const bool track = homology_.dimension() > 0;

  std::vector<int> partner(n > 0 ? at(m.dart_count()) : 0);
  for (int i = 0; i < n; ++i) {
    const auto& c = d.crossing(i);
    const bool a = (choice >> i) & 1U;
    const std::array<std::pair<int, int>, 2> pairs =
        a ? std::array<std::pair<int, int>, 2>{{{c[1], c[2]}, {c[3], c[0]}}}
          : std::array<std::pair<int, int>, 2>{{{c[0], c[1]}, {c[2], c[3]}}};
    for (const auto& [x, y] : pairs) {
      partner[at(x)] = y;
      partner[at(y)] = x;
    }
    ++(a ? s.alpha_count : s.beta_count);
  }
  std::vector<char> seen(at(m.dart_count()), 0);
  for (int start = 0; n > 0 && start < m.dart_count(); ++start) {
    if (seen[at(start)]) continue;
    std::vector<int> curve;
    Vector chain(track ? at(m.edge_count()) : 0);
    int x = start;
    do {
      const int y = partner[at(x)];
      seen[at(x)] = seen[at(y)] = 1;
      curve.push_back(x);
      if (track) chain[at(m.edge_of(y))] += m.dart_sign(y);
      x = m.alpha(y);
    } while (x != start);
    if (track) classes.append_row(homology_.coordinates(chain));
    s.curves.push_back(std::move(curve));
  }
  for (std::size_t i = 0; i < d.surface_loops().size(); ++i) {
    if (track) classes.append_row(homology_.coordinates(d.surface_loops()[i]));
    s.curves.push_back(d.surface_walks()[i]);
  }
  s.c = static_cast<int>(s.curves.size()) + d.free_loops();
  s.image = Subspace(homology_.dimension(), classes);
  s.r = s.image.dim();
  s.k = s.c - s.r;
  return s;
}

std::vector<ResolutionState> states(const LinkDiagram& d, int cap) {
  const StateEnumerator en(d, cap);
  std::vector<ResolutionState> out;
  for (std::uint64_t i = 0; i < en.state_count(); ++i) out.push_back(en.state(i));
  return out;
}

// ---------------------------------------------------------------------------

Poly kauffman(const LinkDiagram& d, const LinkOptions& options) {
  const StateEnumerator en(d, options.cap);
  using Key = std::array<int, 4>;
  const auto hist = accumulate_states<Key>(
      en, [](const ResolutionState& s) { return Key{s.alpha_count, s.beta_count, s.k, s.r}; }, options.parallel);
  Poly out;
  for (const auto& [k, count] : hist)
    out += Poly::monomial(mpz_class(static_cast<unsigned long>(count)), {{"A", k[0]}, {"B", k[1]}, {"d", k[2]}, {"Z", k[3]}});
  return out;
}

TildeK tilde_kauffman(const LinkDiagram& d, const LinkOptions& options) {
  const StateEnumerator en(d, options.cap);
  using Key = std::pair<Subspace, std::array<int, 3>>;
  const auto hist = accumulate_states<Key>(
      en,
      [](const ResolutionState& s) {
        return Key{s.image, {s.alpha_count, s.beta_count, s.k}};
      },
      options.parallel);
  TildeK out;
  for (const auto& [k, count] : hist)
    out[k.first] += Poly::monomial(mpz_class(static_cast<unsigned long>(count)),
                                   {{"A", k.second[0]}, {"B", k.second[1]}, {"d", k.second[2]}});
  return out;
}

Poly specialize(const TildeK& k) {
  Poly out;
  for (const auto& [v, p] : k) out += p * Poly::monomial(1, {{"Z", v.dim()}});
  return out;
}

int writhe(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return 0;
  if (!d.is_oriented()) throw Error(ErrorCode::MissingOrientation, "every strand needs an orientation dart");
  const auto& m = d.base();
  std::vector<char> outgoing(at(m.dart_count()), 0);
  for (int lead : d.orientation()) {
    int x = lead;
    do {
      outgoing[at(x)] = 1;
      x = m.sigma(m.sigma(m.alpha(x)));
    } while (x != lead);
  }
  int w = 0;
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossing(i);
    const int o = outgoing[at(c[0])] ? c[0] : c[2];
    const int u = outgoing[at(c[1])] ? c[1] : c[3];
    w += m.sigma(o) == u ? 1 : -1;
  }
  return w;
}

namespace {

Poly jones_prefactor(int w) { return (w % 2 == 0 ? Poly(1) : Poly(-1)) * u_power(3 * w); }

Poly jones_substitute(const Poly& p) {
  return p.substitute({{"A", u_power(-1)}, {"B", u_power(1)}, {"d", loop_value_u()}});
}

}  // namespace

Poly jones(const LinkDiagram& d, const LinkOptions& options) {
  const int w = writhe(d);
  return jones_prefactor(w) * jones_substitute(kauffman(d, options));
}

TildeK tilde_jones(const LinkDiagram& d, const LinkOptions& options) {
  const int w = writhe(d);
  TildeK out;
  for (const auto& [v, p] : tilde_kauffman(d, options)) {
    Poly j = jones_prefactor(w) * jones_substitute(p);
    if (!j.is_zero()) out[v] = j;
  }
  return out;
}

Poly classical_bracket(const LinkDiagram& d, const LinkOptions& options) {
  const StateEnumerator en(d, options.cap);
  using Key = std::array<int, 2>;
  const auto hist = accumulate_states<Key>(
      en, [](const ResolutionState& s) { return Key{s.alpha_count - s.beta_count, s.c}; }, options.parallel);
  const Poly loop = -(Poly::monomial(1, {{"A", 2}}) + Poly::monomial(1, {{"A", -2}}));
  Poly out;
  for (const auto& [k, count] : hist) {
    if (k[1] < 1) throw Error(ErrorCode::MalformedInput, "state without curves");
    out += Poly::monomial(mpz_class(static_cast<unsigned long>(count)), {{"A", k[0]}}) * loop.pow(k[1] - 1);
  }
  return out;
}

Poly classical_jones(const LinkDiagram& d, const LinkOptions& options) {
  const int w = writhe(d);
  return jones_prefactor(w) * classical_bracket(d, options).substitute({{"A", u_power(-1)}});
}

// ---------------------------------------------------------------------------

TaitGraph tait_graph(const LinkDiagram& d) {
  const auto& m = d.base();
  if (d.crossing_count() == 0) {
    if (d.free_loops() == 1 && d.surface_walks().empty() && m.dart_count() == 0 && m.vertex_count() == 1)
      return TaitGraph{CombinatorialMap({}, {}, 1), {0}};
    throw Error(ErrorCode::NotCellulation, "regions of this crossingless diagram are not disks");
  }
  if (d.free_loops() > 0) throw Error(ErrorCode::NotCellulation, "free loops leave regions that are not disks");
  checkerboard(m);
  std::vector<int> shade(at(m.face_count()), -1);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossing(i);
    for (int p = 0; p < 4; ++p) {
      const int f = corner_face(m, c[at(p)]);
      const int want = p % 2 == 0 ? 1 : 0;
      if (shade[at(f)] >= 0 && shade[at(f)] != want)
        throw Error(ErrorCode::NotAlternating, "region meets both A- and B-corners (crossing " + std::to_string(i + 1) + ")");
      shade[at(f)] = want;
    }
  }
  TaitGraph t;
  std::vector<int> sigma(at(2 * d.crossing_count())), alpha(sigma.size());
  for (int i = 0; i < d.crossing_count(); ++i) {
    alpha[at(2 * i)] = 2 * i + 1;
    alpha[at(2 * i + 1)] = 2 * i;
  }
  for (int f = 0; f < m.face_count(); ++f) {
    if (shade[at(f)] != 1) continue;
    t.vertex_region.push_back(f);
    std::vector<int> rot;
    for (int y : m.face_darts(f)) {
      const int x = m.alpha(y);
      rot.push_back(2 * m.vertex_of(x) + (d.position(x) == 0 ? 0 : 1));
    }
    std::reverse(rot.begin(), rot.end());
    for (std::size_t j = 0; j < rot.size(); ++j) sigma[at(rot[j])] = rot[(j + 1) % rot.size()];
  }
  t.map = CombinatorialMap(std::move(sigma), std::move(alpha), 0);
  // Vertices of t.map are numbered by smallest dart; reorder the regions to match.
  std::vector<int> regions(at(t.map.vertex_count()));
  for (int f : t.vertex_region) {
    const int x = m.alpha(m.face_darts(f)[0]);
    regions[at(t.map.vertex_of(2 * m.vertex_of(x) + (d.position(x) == 0 ? 0 : 1)))] = f;
  }
  t.vertex_region = std::move(regions);
  return t;
}

PolynomialReport verify_thistlethwaite(const LinkDiagram& d, const LinkOptions& options) {
  PolynomialReport report;
  const std::string witness = serialize_diagram(d);
  report.input = witness;
  const TaitGraph tait = tait_graph(d);
  const EmbeddedSubgraph graph = EmbeddedSubgraph::whole(tait.map);
  const EvalOptions eval{std::max(options.cap, kDefaultEdgeCap), options.parallel};
  const Poly p = p_bruteforce(graph, eval);
  const Poly k = kauffman(d, options);

  const int g = d.genus();
  const int v = tait.map.vertex_count(), c = tait.map.component_count(), e = tait.map.edge_count();
  const int n = e - v + c;
  auto mono = [](std::map<std::string, int> powers) { return Poly::monomial(1, powers); };
  const Poly rhs = mono({{"A", g + v - c}, {"B", n - g}, {"d", c}, {"Z", g}}) *
                   p.substitute({{"X", mono({{"B", 1}, {"d", 1}, {"A", -1}})},
                                 {"Y", mono({{"A", 1}, {"d", 1}, {"B", -1}})},
                                 {"A", mono({{"A", 1}, {"B", -1}, {"Z", -1}})},
                                 {"B", mono({{"B", 1}, {"A", -1}, {"Z", -1}})}});
  report.polynomials.push_back({"K", k});
  report.polynomials.push_back({"P_tait", p});
  report.check("tait-surface", tait.map.genus() == g,
               "Tait graph genus " + std::to_string(tait.map.genus()) + ", diagram genus " + std::to_string(g), witness);
  report.check_equal("bracket-from-tait", k, rhs, witness);

  // Per-state correspondences.
  const StateEnumerator en(d, options.cap);
  const InvariantContext ctx(graph);
  const SurfaceHomology& hom = en.homology();
  std::vector<Vector> edge_image;
  for (int i = 0; i < d.crossing_count(); ++i) {
    Vector a = corner_path(d.base(), d.crossing(i)[0]);
    const Vector b = corner_path(d.base(), d.crossing(i)[2]);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
    edge_image.push_back(std::move(a));
  }
  struct Check {
    const char* name;
    bool ok = true;
    std::string detail;
  };
  std::array<Check, 6> checks{{{"state-alpha-edges", true, {}},
                               {"state-k", true, {}},
                               {"state-r-l", true, {}},
                               {"state-curves-boundary", true, {}},
                               {"state-k-plus-r", true, {}},
                               {"state-subgroup", true, {}}}};
  auto fail = [&](Check& ch, std::uint64_t choice, const std::string& what) {
    if (!ch.ok) return;
    ch.ok = false;
    ch.detail = state_witness(witness, choice) + what;
  };
  for (std::uint64_t choice = 0; choice < en.state_count(); ++choice) {
    const ResolutionState s = en.state(choice);
    const SubgraphInvariants h = ctx.compute(choice);
    if (s.alpha_count != h.e) fail(checks[0], choice, "alpha(S)=" + std::to_string(s.alpha_count) + " e(H)=" + std::to_string(h.e));
    if (s.k != h.c + h.k) fail(checks[1], choice, "k(S)=" + std::to_string(s.k) + " c(H)+k(H)=" + std::to_string(h.c + h.k));
    if (s.r != h.l) fail(checks[2], choice, "r(S)=" + std::to_string(s.r) + " l(H)=" + std::to_string(h.l));
    if (s.c != h.bc) fail(checks[3], choice, "c(S)=" + std::to_string(s.c) + " bc(H)=" + std::to_string(h.bc));
    if (s.k + s.r != s.c) fail(checks[4], choice, "k+r != c");
    if (checks[5].ok && hom.dimension() > 0) {
      const Matrix cycles = subgraph_cycles(tait.map, to_host_mask(graph, choice));
      Matrix coords(0, hom.dimension());
      for (int r = 0; r < cycles.rows(); ++r) {
        Vector chain(at(d.base().edge_count()));
        for (int i = 0; i < cycles.cols(); ++i) {
          const auto& z = cycles.at(r, i);
          if (z == 0) continue;
          for (std::size_t j = 0; j < chain.size(); ++j) chain[j] += z * edge_image[at(i)][j];
        }
        if (!hom.is_cycle(chain)) throw Error(ErrorCode::InternalEulerParity, "Tait cycle does not map to a cycle");
        coords.append_row(hom.coordinates(chain));
      }
      const Subspace vh(hom.dimension(), coords);
      const Subspace radical = intersect(vh, orthogonal_complement(vh, hom.intersection_form()));
      if (!(radical == s.image))
        fail(checks[5], choice, "V(S) " + s.image.to_string() + "\nV(H) n V(H)perp " + radical.to_string());
    }
  }
  for (const auto& ch : checks) report.check(ch.name, ch.ok, ch.detail, ch.ok ? std::string{} : witness);

  // Shading swap: switching every crossing shades the other regions.
  if (d.crossing_count() > 0) {
    const TaitGraph other = tait_graph(mirror(d));
    report.check("shading-swap-dual", canonical_code(other.map) == canonical_code(dual(tait.map)),
                 "Tait graph of the mirror is not the dual Tait graph", witness);
    const Poly q = p_bruteforce(EmbeddedSubgraph::whole(other.map), eval);
    report.check_equal("shading-swap-duality", q,
                       p.substitute({{"X", Poly::variable("Y")},
                                     {"Y", Poly::variable("X")},
                                     {"A", Poly::variable("B")},
                                     {"B", Poly::variable("A")}}),
                       witness);
  }
  return report;
}

}  // namespace surftutte
