#pragma once

// Brute-force classical Kauffman bracket and Jones polynomial from planar
// diagram codes, kept independent of the library's state enumeration.
//
// A crossing lists its four arc labels counterclockwise starting at the
// incoming under-arc (a, b, c, d). The A-smoothing joins a-b and c-d, the
// B-smoothing a-d and b-c. The crossing is positive when b is the outgoing
// over-arc.

#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <vector>

#include "surftutte/links.hpp"
#include "surftutte/poly.hpp"

namespace oracle {

struct PdCrossing {
  std::array<int, 4> arcs;
  bool b_outgoing = true;
};

struct PdCode {
  std::vector<PdCrossing> crossings;
  int free_loops = 0;
};

inline surftutte::Poly a_power(int e) { return surftutte::Poly::monomial(1, {{"A", e}}); }

inline int count_loops(const PdCode& pd, unsigned long choice) {
  std::map<int, int> parent;
  for (const auto& x : pd.crossings)
    for (int a : x.arcs) parent[a] = a;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& [a, b, c, d] = pd.crossings[i].arcs;
    if ((choice >> i) & 1UL) {
      join(a, b);
      join(c, d);
    } else {
      join(a, d);
      join(b, c);
    }
  }
  int loops = pd.free_loops;
  for (const auto& [arc, p] : parent)
    if (find(arc) == arc) ++loops;
  return loops;
}

// <D> with <O> = 1.
inline surftutte::Poly bracket(const PdCode& pd) {
  const surftutte::Poly delta = -(a_power(2) + a_power(-2));
  const int n = static_cast<int>(pd.crossings.size());
  surftutte::Poly out;
  for (unsigned long choice = 0; choice < (1UL << n); ++choice) {
    const int a = std::popcount(choice);
    out += a_power(a - (n - a)) * delta.pow(count_loops(pd, choice) - 1);
  }
  return out;
}

inline int writhe(const PdCode& pd) {
  int w = 0;
  for (const auto& x : pd.crossings) w += x.b_outgoing ? 1 : -1;
  return w;
}

// (-A^3)^{-w} <D>, still in A (t = A^-4).
inline surftutte::Poly jones_in_a(const PdCode& pd) {
  const int w = writhe(pd);
  return (w % 2 == 0 ? surftutte::Poly(1) : surftutte::Poly(-1)) * a_power(-3 * w) * bracket(pd);
}

// Reads a planar diagram off an oriented crossing diagram; arc labels are
// edge indices.
inline PdCode from_diagram(const surftutte::LinkDiagram& d) {
  const auto& m = d.base();
  std::vector<char> outgoing(static_cast<std::size_t>(m.dart_count()), 0);
  for (int lead : d.orientation()) {
    int x = lead;
    do {
      outgoing[static_cast<std::size_t>(x)] = 1;
      x = m.sigma(m.sigma(m.alpha(x)));
    } while (x != lead);
  }
  PdCode pd;
  pd.free_loops = d.free_loops();
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossing(i);
    // Start at the incoming under dart.
    const int start = outgoing[static_cast<std::size_t>(c[1])] ? 3 : 1;
    PdCrossing x;
    for (int k = 0; k < 4; ++k) x.arcs[static_cast<std::size_t>(k)] = m.edge_of(c[static_cast<std::size_t>((start + k) % 4)]);
    x.b_outgoing = outgoing[static_cast<std::size_t>(c[static_cast<std::size_t>((start + 1) % 4)])] != 0;
    pd.crossings.push_back(x);
  }
  return pd;
}

}  // namespace oracle
