#include "doctest.h"

#include "surftutte/corpus.hpp"
#include "surftutte/error.hpp"
#include "surftutte/invariants.hpp"

using namespace surftutte;

namespace {

EmbeddedSubgraph graph_of(const char* text) { return parse_map(text); }

std::vector<bool> mask(std::initializer_list<bool> bits) { return bits; }

}  // namespace

TEST_CASE("torus loop examples") {
  const auto g_a = graph_of("sigma:(1 3 2 4) alpha:(1 2)(3 4) graph_edges: 1");
  const auto empty = invariants(g_a, mask({false, false}));
  CHECK(empty.c == 1);
  CHECK(empty.n == 0);
  CHECK(empty.bc == 1);
  CHECK(empty.s == 0);
  CHECK(empty.s_perp == 2);
  CHECK(empty.k == 0);
  CHECK(empty.l == 0);

  const auto a = invariants(g_a, mask({true, false}));
  CHECK(a == SubgraphInvariants{1, 1, 1, 1, 2, 0, 0, 0, 1});

  const auto sl = invariants(graph_of("sigma:(1 2) alpha:(1 2)"), mask({true}));
  CHECK(sl.c == 1);
  CHECK(sl.n == 1);
  CHECK(sl.s == 0);
  CHECK(sl.s_perp == 0);
  CHECK(sl.k == 1);
  CHECK(sl.l == 0);

  CHECK_THROWS_AS(invariants(g_a, mask({false, true})), Error);
}

TEST_CASE("spanning violations") {
  const auto g = graph_of("sigma:(1)(2) alpha:(1 2) graph_vertices: 1 graph_edges:");
  try {
    invariants(g, mask({true}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSpanning);
  }
}

TEST_CASE("dual subgraphs") {
  const auto tb2 = graph_of("sigma:(1 3 2 4) alpha:(1 2)(3 4)");
  CHECK(dual_subgraph(tb2, mask({true, false})) == mask({false, true}));
  CHECK(dual_subgraph(tb2, mask({true, true})) == mask({false, false}));
  try {
    dual_subgraph(graph_of("sigma:(1 3 2 4) alpha:(1 2)(3 4) graph_edges: 1"), mask({true, false}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCellulation);
  }

  const auto theta = graph_of("sigma:(1 3 5)(2 6 4), alpha:(1 2)(3 4)(5 6)");
  const auto tri = EmbeddedSubgraph::whole(dual(theta.host()));
  const auto h = mask({true, false, false});
  const auto hd = dual_subgraph(theta, h);
  CHECK(hd == mask({false, true, true}));
  const auto a = invariants(theta, h);
  const auto b = invariants(tri, hd);
  const auto gd = invariants(tri, mask({true, true, true}));
  const auto g = invariants(theta, mask({true, true, true}));
  CHECK(a.s == b.s_perp);
  CHECK(a.s_perp == b.s);
  CHECK(b.c - gd.c == a.k);
  CHECK(a.c - g.c == b.k);
}

TEST_CASE("identities on random embedded subgraphs") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto host = random_map(rng, rng.between(0, 9));
    const auto g = random_embedded_subgraph(rng, host);
    InvariantContext ctx(g);
    const int genus = host.genus();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ctx.edge_count()); ++m) {
      const auto r = ctx.compute(m);
      CHECK(r.n == r.e - r.v + r.c);
      CHECK(r.k >= 0);
      CHECK(r.l >= 0);
      CHECK(r.s % 2 == 0);
      CHECK(r.s_perp % 2 == 0);
      CHECK(r.s + r.s_perp + 2 * r.l == 2 * genus);
      CHECK(r.k + r.l + r.s == r.n);
    }
  }
}

TEST_CASE("dual pairing on random cellulations") {
  for (const auto& m : random_map_corpus(23, 60, 1, 8)) {
    const auto g = EmbeddedSubgraph::whole(m);
    const auto gd = EmbeddedSubgraph::whole(dual(m));
    InvariantContext p(g), d(gd);
    const std::uint64_t full = (std::uint64_t{1} << m.edge_count()) - 1;
    for (std::uint64_t h = 0; h <= full; ++h) {
      const auto a = p.compute(h);
      const auto b = d.compute(full & ~h);
      CHECK(a.s == b.s_perp);
      CHECK(a.s_perp == b.s);
      CHECK(b.c - d.graph_components() == a.k);
      CHECK(a.c - p.graph_components() == b.k);
    }
  }
}
