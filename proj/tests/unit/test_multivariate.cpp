#include "doctest.h"

#include "surftutte/corpus.hpp"
#include "surftutte/error.hpp"
#include "surftutte/multivariate.hpp"

using namespace surftutte;

namespace {

CombinatorialMap map_of(const char* text) { return parse_map(text).host(); }

Poly pbar_of(const CombinatorialMap& m) { return p_bar(EmbeddedSubgraph::whole(m), EdgeWeighting::symbolic(m)); }

}  // namespace

TEST_CASE("small examples") {
  CHECK(pbar_of(map_of("sigma:(1 2) alpha:(1 2)")) == Poly::parse("q + q*v1"));
  CHECK(pbar_of(map_of("sigma:(1 3 2 4) alpha:(1 2)(3 4)")) == Poly::parse("q*B + q*v1 + q*v3 + q*v1*v3*A"));
}

TEST_CASE("weights files") {
  const auto tb2 = map_of("sigma:(1 3 2 4) alpha:(1 2)(3 4)");
  const auto w = EdgeWeighting::parse("# potts\nedge 3 = 2*x^-1\n", tb2);
  CHECK(w.weight(0) == Poly::variable("v1"));
  CHECK(w.weight(1) == Poly::parse("2*x^-1"));
  CHECK(p_bar(EmbeddedSubgraph::whole(tb2), w) == Poly::parse("q*B + q*v1 + 2*q*x^-1 + 2*q*v1*x^-1*A"));

  auto code = [&](const char* text) {
    try {
      EdgeWeighting::parse(text, tb2);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalEulerParity;
  };
  CHECK(code("edge 1 = q") == ErrorCode::ReservedWeightName);
  CHECK(code("edge 1 = 1 + x") == ErrorCode::MalformedInput);
  CHECK(code("edge 2 = x") == ErrorCode::MalformedInput);
  CHECK(code("vertex 1 = x") == ErrorCode::MalformedInput);
}

TEST_CASE("duality on the small maps") {
  for (const char* text : {"sigma:(1 3 2 4) alpha:(1 2)(3 4)", "sigma:(1 2) alpha:(1 2)", "sigma:(1)(2) alpha:(1 2)",
                           "sigma:(1 3 5)(2 6 4) alpha:(1 2)(3 4)(5 6)"}) {
    const auto m = map_of(text);
    const auto r = verify_multivariate_duality(m, EdgeWeighting::symbolic(m));
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("specialisations on random embedded graphs") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto host = random_map(rng, rng.between(0, 8));
    const auto g = random_embedded_subgraph(rng, host);
    const auto r = verify_multivariate_specializations(g, EdgeWeighting::symbolic(host));
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("duality on random maps") {
  for (const auto& m : random_map_corpus(43, 60, 0, 8)) {
    const auto r = verify_multivariate_duality(m, EdgeWeighting::symbolic(m));
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}
