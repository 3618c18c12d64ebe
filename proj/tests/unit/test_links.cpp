#include "doctest.h"

#include <functional>

#include "pd_oracle.hpp"
#include "surftutte/corpus.hpp"
#include "surftutte/error.hpp"
#include "surftutte/links.hpp"
#include "surftutte/surface_tutte.hpp"

using namespace surftutte;

namespace {

LinkDiagram load(const char* name) { return load_diagram_file(std::string(SURFTUTTE_DATA_DIR "/") + name); }

CombinatorialMap map_of(const char* text) { return parse_map(text).host(); }

Poly P(const char* text) { return Poly::parse(text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::MalformedInput;
}

const char* kCurl = "crossing 1: darts (1 2 3 4) over (1 3)\nalpha: (1 2)(3 4)\norient: 1\n";

// Random planar diagram: medial of a planar map with some crossings switched.
LinkDiagram random_planar_diagram(Rng& rng, int max_crossings) {
  LinkDiagram d = random_alternating_diagram(rng, 0, 1, max_crossings);
  for (int i = 0; i < d.crossing_count(); ++i)
    if (rng.coin()) d = switch_crossing(d, i);
  return d;
}

}  // namespace

TEST_CASE("diagram parsing") {
  const auto unknot = load("unknot.vlk");
  CHECK(unknot.crossing_count() == 0);
  CHECK(unknot.genus() == 0);

  const auto trefoil = load("trefoil.vlk");
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.base().edge_count() == 6);
  CHECK(trefoil.base().face_count() == 5);
  CHECK(trefoil.genus() == 0);
  CHECK(trefoil.is_oriented());
  CHECK(trefoil.strands().size() == 1);

  CHECK(load("vtrefoil.vlk").genus() == 1);
  CHECK(load("torus-alt.vlk").genus() == 1);
  CHECK(load("torus-loop.vlk").genus() == 1);

  const auto again = parse_diagram(serialize_diagram(trefoil));
  CHECK(serialize_diagram(again) == serialize_diagram(trefoil));
  CHECK(serialize_diagram(parse_diagram(serialize_diagram(load("torus-loop.vlk")))) ==
        serialize_diagram(load("torus-loop.vlk")));
}

TEST_CASE("diagram errors") {
  CHECK(code_of([] { parse_diagram("crossing 1: darts (1 2 3) over (1 3)\nalpha: (1 2)(3 4)"); }) ==
        ErrorCode::NotFourValent);
  CHECK(code_of([] { parse_diagram("crossing 1: darts (1 2 3 4) over (1 2)\nalpha: (1 2)(3 4)"); }) ==
        ErrorCode::OverPairNotOpposite);
  CHECK(code_of([] { jones(parse_diagram("crossing 1: darts (1 2 3 4) over (1 3)\nalpha: (1 2)(3 4)")); }) ==
        ErrorCode::MissingOrientation);
  CHECK(code_of([] { parse_diagram("crossing 1: darts (1 2 3 4) over (1 3)\nalpha: (1 2)(3 5)"); }) !=
        ErrorCode::NotFourValent);
  CHECK(code_of([] { parse_diagram("# nothing\n"); }) == ErrorCode::MalformedInput);

  Rng rng(5);
  const auto big = medial_diagram(random_map(rng, 21));
  CHECK(code_of([&] { kauffman(big); }) == ErrorCode::TooManyCrossings);
  CHECK(code_of([&] { states(big); }) == ErrorCode::TooManyCrossings);

  const auto trefoil = load("trefoil.vlk");
  CHECK(code_of([&] { tait_graph(switch_crossing(trefoil, 0)); }) == ErrorCode::NotAlternating);
  CHECK(code_of([&] { tait_graph(load("vtrefoil.vlk")); }) == ErrorCode::NotCheckerboardColorable);
}

TEST_CASE("states") {
  const auto trivial = states(load("unknot.vlk"));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].c == 1);
  CHECK(trivial[0].r == 0);
  CHECK(trivial[0].k == 1);

  const auto essential = states(load("torus-loop.vlk"));
  REQUIRE(essential.size() == 1);
  CHECK(essential[0].c == 1);
  CHECK(essential[0].r == 1);
  CHECK(essential[0].k == 0);

  const auto trefoil = states(load("trefoil.vlk"));
  REQUIRE(trefoil.size() == 8);
  for (const auto& s : trefoil) {
    CHECK(s.r == 0);
    CHECK(s.k == s.c);
    CHECK(s.alpha_count + s.beta_count == 3);
  }

  for (const char* name : {"vtrefoil.vlk", "torus-alt.vlk"})
    for (const auto& s : states(load(name))) CHECK(s.k + s.r == s.c);
}

TEST_CASE("generalised bracket") {
  CHECK(kauffman(load("unknot.vlk")) == P("d"));
  CHECK(kauffman(load("torus-loop.vlk")) == P("Z"));
  CHECK(kauffman(parse_diagram(kCurl)) == P("A*d + B*d^2"));

  const auto tk = tilde_kauffman(load("torus-loop.vlk"));
  REQUIRE(tk.size() == 1);
  CHECK(tk.begin()->first.dim() == 1);
  CHECK(tk.begin()->second == P("1"));

  for (const auto& [v, p] : tilde_kauffman(load("trefoil.vlk"))) CHECK(v.dim() == 0);
  for (const char* name : {"vtrefoil.vlk", "torus-alt.vlk", "trefoil.vlk"}) {
    const auto d = load(name);
    CHECK(specialize(tilde_kauffman(d)) == kauffman(d));
    CHECK(kauffman(d, {kDefaultCrossingCap, false}) == kauffman(d, {kDefaultCrossingCap, true}));
  }
}

TEST_CASE("jones polynomials") {
  CHECK(classical_jones(load("unknot.vlk")) == P("1"));
  CHECK(jones(load("unknot.vlk")) == P("-u^-2 - u^2"));
  CHECK(jones(load("torus-loop.vlk")) == P("Z"));

  const auto trefoil = load("trefoil.vlk");
  CHECK(writhe(trefoil) == -3);
  CHECK(classical_jones(trefoil).to_string() == "-u^-16 + u^-12 + u^-4");
  CHECK(jones(trefoil).max_degree("Z") == 0);
  CHECK(writhe(mirror(trefoil)) == 3);
  CHECK(classical_jones(mirror(trefoil)) == P("u^4 + u^12 - u^16"));

  // Known value for the virtual trefoil: t^-1 + t^-3/2 - t^-5/2.
  CHECK(classical_jones(load("vtrefoil.vlk")) == P("u^-4 + u^-6 - u^-10"));
  CHECK(jones(load("vtrefoil.vlk")).max_degree("Z") == 1);

  const auto tj = tilde_jones(load("torus-alt.vlk"));
  Poly sum;
  for (const auto& [v, p] : tj) sum += p * Poly::monomial(1, {{"Z", v.dim()}});
  CHECK(sum == jones(load("torus-alt.vlk")));
}

TEST_CASE("classical oracle") {
  const auto trefoil = load("trefoil.vlk");
  const auto pd = oracle::from_diagram(trefoil);
  CHECK(oracle::writhe(pd) == -3);
  CHECK(oracle::jones_in_a(pd) == P("A^4 + A^12 - A^16"));
  const Poly u_to_a_inv = classical_jones(trefoil).substitute({{"u", P("A^-1")}});
  CHECK(u_to_a_inv == oracle::jones_in_a(pd));

  // A PD code written by hand: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3].
  oracle::PdCode hand{{{{1, 4, 2, 5}, false}, {{3, 6, 4, 1}, false}, {{5, 2, 6, 3}, false}}, 0};
  CHECK(oracle::jones_in_a(hand) == oracle::jones_in_a(pd));

  Rng rng(404);
  const Poly loop = P("-A^2 - A^-2");
  for (int i = 0; i < 40; ++i) {
    const auto d = random_planar_diagram(rng, 6);
    const auto code = oracle::from_diagram(d);
    CHECK(classical_bracket(d) == oracle::bracket(code));
    CHECK(classical_jones(d).substitute({{"u", P("A^-1")}}) == oracle::jones_in_a(code));
    const Poly k = kauffman(d);
    CHECK(k.max_degree("Z") == 0);
    CHECK(k.substitute({{"Z", P("d")}}).substitute({{"B", P("A^-1")}, {"d", loop}}) == loop * classical_bracket(d));
  }
}

TEST_CASE("Tait graphs") {
  const auto theta = map_of("sigma:(1 3 5)(2 6 4) alpha:(1 2)(3 4)(5 6)");
  const auto triangle = map_of("sigma:(1 6)(2 3)(4 5) alpha:(1 2)(3 4)(5 6)");
  const auto trefoil = load("trefoil.vlk");
  CHECK(canonical_code(tait_graph(trefoil).map) == canonical_code(theta));
  CHECK(canonical_code(tait_graph(mirror(trefoil)).map) == canonical_code(triangle));

  const auto curl = parse_diagram(kCurl);
  CHECK(canonical_code(tait_graph(curl).map) == canonical_code(map_of("sigma:(1)(2) alpha:(1 2)")));
  CHECK(canonical_code(tait_graph(mirror(curl)).map) == canonical_code(map_of("sigma:(1 2) alpha:(1 2)")));

  const auto torus = tait_graph(load("torus-alt.vlk"));
  CHECK(torus.map.genus() == 1);
  CHECK(canonical_code(torus.map) == canonical_code(map_of("sigma:(1 3 5)(2 4 6) alpha:(1 2)(3 4)(5 6)")));

  CHECK(tait_graph(load("unknot.vlk")).map.vertex_count() == 1);

  Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    const auto g = random_map(rng, rng.between(1, 6));
    if (g.isolated_vertices() > 0) continue;
    const auto t = tait_graph(medial_diagram(g));
    CHECK(canonical_code(t.map) == canonical_code(g));
    CHECK(canonical_code(tait_graph(mirror(medial_diagram(g))).map) == canonical_code(dual(g)));
    CHECK(verify_duality(t.map).passed());
  }
}

TEST_CASE("bracket from the Tait polynomial") {
  for (const char* name : {"trefoil.vlk", "torus-alt.vlk", "unknot.vlk"}) {
    const auto report = verify_thistlethwaite(load(name));
    CHECK_MESSAGE(report.passed(), report.to_text());
  }
  CHECK(verify_thistlethwaite(parse_diagram(kCurl)).passed());
  CHECK(verify_thistlethwaite(mirror(parse_diagram(kCurl))).passed());

  Rng rng(2024);
  for (int genus = 1; genus <= 2; ++genus)
    for (int i = 0; i < 8; ++i) {
      const auto d = random_alternating_diagram(rng, genus, 2, 6);
      const auto report = verify_thistlethwaite(d);
      CHECK_MESSAGE(report.passed(), report.to_text());
    }
}
