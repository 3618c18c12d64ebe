#include "doctest.h"

#include "surftutte/corpus.hpp"
#include "surftutte/error.hpp"
#include "surftutte/kernels.hpp"
#include "surftutte/surface_tutte.hpp"

using namespace surftutte;

namespace {

CombinatorialMap map_of(const char* text) { return parse_map(text).host(); }

const char* kTb2 = "sigma:(1 3 2 4) alpha:(1 2)(3 4)";
const char* kSl = "sigma:(1 2) alpha:(1 2)";
const char* kSb = "sigma:(1)(2) alpha:(1 2)";
const char* kTheta = "sigma:(1 3 5)(2 6 4), alpha:(1 2)(3 4)(5 6)";

std::string p_of(const EmbeddedSubgraph& s) { return p_bruteforce(s).to_string(); }

}  // namespace

TEST_CASE("figure 2 configuration") {
  CHECK(p_of(load_map_file(SURFTUTTE_DATA_DIR "/fig2-g1.map")) == "1 + B");
  CHECK(p_of(load_map_file(SURFTUTTE_DATA_DIR "/fig2.map")) == "2 + B + Y");
  CHECK(p_of(parse_map("sigma:(1 3 2 4) alpha:(1 2)(3 4) graph_edges: 1")) == "1 + B");
}

TEST_CASE("small polynomials") {
  CHECK(p_of(EmbeddedSubgraph::whole(map_of(kTb2))) == "2 + A + B");
  CHECK(p_of(EmbeddedSubgraph::whole(map_of(kSb))) == "1 + X");
  CHECK(p_of(EmbeddedSubgraph::whole(map_of(kSl))) == "1 + Y");
  CHECK(p_recursive(EmbeddedSubgraph::whole(map_of(kTb2))).to_string() == "2 + A + B");
  CHECK(p_recursive(EmbeddedSubgraph::whole(map_of(kSb))).to_string() == "1 + X");
  CHECK(p_recursive(EmbeddedSubgraph::whole(map_of(kSl))).to_string() == "1 + Y");
  // Theta on the sphere: 1 empty, 3 single edges, 3 pairs (one cycle), 1 full.
  CHECK(p_of(EmbeddedSubgraph::whole(map_of(kTheta))) == "3 + X + 3*Y + Y^2");
}

TEST_CASE("tutte, BR and P' examples") {
  CHECK(tutte(underlying_graph(EmbeddedSubgraph::whole(map_of(kTb2)))).to_string() == "1 + 2*Y + Y^2");
  CHECK(tutte(underlying_graph(EmbeddedSubgraph::whole(map_of(kSb)))).to_string() == "1 + X");
  Multigraph triangle{3, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK(tutte(triangle).to_string() == "3 + 3*X + Y + X^2");

  CHECK(bollobas_riordan(map_of(kTb2)).to_string() == "1 + 2*Y + Y^2*Z^2");
  CHECK(bollobas_riordan(map_of(kSl)).to_string() == "1 + Y");
  CHECK(bollobas_riordan(map_of(kSb)).to_string() == "X");

  CHECK(p_prime(map_of(kTb2)) == Poly::parse("B^2 + 2*Y + Y^2*A^2"));
  CHECK(p_prime(map_of(kSl)).to_string() == "1 + Y");
}

TEST_CASE("cap") {
  Rng rng(1);
  const auto big = EmbeddedSubgraph::whole(random_map(rng, 21));
  try {
    p_bruteforce(big);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyEdges);
  }
}

TEST_CASE("verifiers pass on the small maps") {
  for (const char* text : {kTb2, kSl, kSb, kTheta}) {
    const auto m = map_of(text);
    CHECK(verify_duality(m).passed());
    CHECK(verify_specializations(m).passed());
    CHECK(verify_recurrences(EmbeddedSubgraph::whole(m)).passed());
  }
  const auto r = verify_multiplicativity(map_of(kTb2), map_of(kSl));
  CHECK(r.passed());
  CHECK(r.polynomials.back().second == Poly::parse("2 + A + B") * Poly::parse("1 + Y"));
}

TEST_CASE("figure 2 is not multiplicative") {
  const Poly g1 = p_bruteforce(load_map_file(SURFTUTTE_DATA_DIR "/fig2-g1.map"));
  CHECK(p_bruteforce(load_map_file(SURFTUTTE_DATA_DIR "/fig2.map")) != g1 * g1);
}

TEST_CASE("recursive evaluator agrees with the state sum on embedded subgraphs") {
  Rng rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const auto host = random_map(rng, rng.between(0, 9));
    const auto g = random_embedded_subgraph(rng, host);
    CHECK(p_recursive(g) == p_bruteforce(g));
    CHECK(verify_recurrences(g).passed());
  }
}

TEST_CASE("serial and parallel kernels agree") {
  Rng rng(31);
  const auto m = random_map(rng, 14);
  InvariantContext ctx(EmbeddedSubgraph::whole(m));
  auto key = [](std::uint64_t, const SubgraphInvariants& r) { return StateKey{r.c, r.k, r.s, r.s_perp}; };
  CHECK(accumulate_serial(ctx, key) == accumulate_parallel(ctx, key));
}
