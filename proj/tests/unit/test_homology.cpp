#include "doctest.h"

#include "surftutte/corpus.hpp"
#include "surftutte/error.hpp"
#include "surftutte/homology.hpp"

using namespace surftutte;

namespace {

CombinatorialMap map_of(const char* text) { return parse_map(text).host(); }

const char* kTb2 = "sigma:(1 3 2 4) alpha:(1 2)(3 4)";
const char* kSl = "sigma:(1 2) alpha:(1 2)";
const char* kTheta = "sigma:(1 3 5)(2 6 4) alpha:(1 2)(3 4)(5 6)";
// One vertex, four loops, rotation a b a' b' c d c' d'.
const char* kOctagon = "sigma:(1 3 2 4 5 7 6 8) alpha:(1 2)(3 4)(5 6)(7 8)";

std::vector<bool> edges(std::initializer_list<bool> bits) { return bits; }

}  // namespace

TEST_CASE("linear algebra basics") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  const Matrix n = nullspace(m);
  CHECK(n.rows() == 1);
  CHECK(m * n.row(0) == Vector{0, 0, 0});
  CHECK(determinant(Matrix::from_rows({{0, 1}, {-1, 0}}, 2)) == 1);
  const Subspace a(3, Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 3));
  const Subspace b(3, Matrix::from_rows({{0, 1, 0}, {0, 0, 1}}, 3));
  CHECK(intersect(a, b) == Subspace(3, Matrix::from_rows({{0, 5, 0}}, 3)));
  CHECK(span_sum(a, b) == Subspace::whole(3));
}

TEST_CASE("H1 dimensions") {
  CHECK(SurfaceHomology(map_of(kTb2)).dimension() == 2);
  CHECK(SurfaceHomology(map_of(kSl)).dimension() == 0);
  CHECK(SurfaceHomology(map_of(kTheta)).dimension() == 0);
  for (const auto& m : random_map_corpus(53, 100, 0, 10)) CHECK(SurfaceHomology(m).dimension() == 2 * m.genus());
}

TEST_CASE("intersection forms") {
  const SurfaceHomology torus(map_of(kTb2));
  const auto& omega = torus.intersection_form();
  CHECK(omega.rows() == 2);
  CHECK(omega.at(0, 0) == 0);
  CHECK(abs(omega.at(0, 1)) == 1);
  CHECK(omega.at(1, 0) == -omega.at(0, 1));

  CHECK(SurfaceHomology(map_of(kSl)).intersection_form().rows() == 0);

  const SurfaceHomology genus2(map_of(kOctagon));
  CHECK(genus2.map().genus() == 2);
  CHECK(genus2.intersection_form().rows() == 4);
  CHECK(determinant(genus2.intersection_form()) != 0);
}

TEST_CASE("image subspaces") {
  const auto tb2 = map_of(kTb2);
  const SurfaceHomology h(tb2);
  const auto g = parse_map(kTb2);
  const auto a = image_data(h, g, edges({true, false}));
  CHECK(a.v.dim() == 1);
  CHECK(a.k == 0);
  const auto loop = image_data(SurfaceHomology(map_of(kSl)), parse_map(kSl), edges({true}));
  CHECK(loop.v.dim() == 0);
  CHECK(loop.k == 1);
}

TEST_CASE("orthogonal complements") {
  const SurfaceHomology h(map_of(kTb2));
  const auto& omega = h.intersection_form();
  CHECK(orthogonal_complement(Subspace::zero(2), omega) == Subspace::whole(2));
  const Subspace a = image_subspace(h, edges({true, false}));
  CHECK(orthogonal_complement(a, omega) == a);
  CHECK_THROWS_AS(orthogonal_complement(Subspace::zero(3), omega), Error);

  const SurfaceHomology h2(map_of(kOctagon));
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix rows(0, 4);
    for (int r = 0; r < rng.between(0, 3); ++r) {
      Vector v;
      for (int c = 0; c < 4; ++c) v.push_back(rng.between(-2, 2));
      rows.append_row(v);
    }
    const Subspace v(4, rows);
    const Subspace perp = orthogonal_complement(v, h2.intersection_form());
    CHECK(perp.dim() == 4 - v.dim());
    CHECK(orthogonal_complement(perp, h2.intersection_form()) == v);
  }
}

TEST_CASE("tilde P") {
  const auto tb2 = parse_map(kTb2);
  const auto p = tilde_p(tb2);
  CHECK(p.size() == 4);
  const SurfaceHomology h(tb2.host());
  CHECK(specialize(p, h.intersection_form()).to_string() == "2 + A + B");

  const auto sl = tilde_p(parse_map(kSl));
  CHECK(sl.size() == 1);
  CHECK(sl.begin()->first == Subspace::zero(0));
  CHECK(sl.begin()->second.to_string() == "1 + Y");

  // An essential and a trivial loop in the torus: same abstract graph, different coefficients.
  const auto essential = tilde_p(parse_map("sigma:(1 3 2 4) alpha:(1 2)(3 4) graph_edges: 1"));
  const auto trivial = tilde_p(parse_map("sigma:(1 2 3 5 4 6) alpha:(1 2)(3 4)(5 6) graph_edges: 1"));
  CHECK(essential != trivial);

  for (const auto& m : random_map_corpus(59, 40, 0, 7)) {
    const auto g = EmbeddedSubgraph::whole(m);
    CHECK(specialize(tilde_p(g), SurfaceHomology(m).intersection_form()) == p_bruteforce(g));
  }
}

TEST_CASE("radial map") {
  for (const auto& m : random_map_corpus(61, 60, 1, 8)) {
    const auto r = radial_map(m);
    CHECK(r.genus() == m.genus());
    CHECK(r.edge_count() == 2 * m.edge_count());
    for (int f = 0; f < r.face_count(); ++f) CHECK(r.face_darts(f).size() == 4);
  }
}

TEST_CASE("subgroup duality") {
  for (const char* text : {kTb2, kSl, kTheta, kOctagon}) {
    const auto r = verify_subgroup_duality(map_of(text));
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
  for (const auto& m : random_map_corpus(67, 40, 0, 7)) {
    const auto r = verify_subgroup_duality(m);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("cross-check against the combinatorial invariants") {
  Rng rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const auto host = random_map(rng, rng.between(0, 8));
    const auto g = random_embedded_subgraph(rng, host);
    const auto r = verify_homology_cross_check(g);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}
