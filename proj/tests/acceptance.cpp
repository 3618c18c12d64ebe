// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pd_oracle.hpp"
#include "surftutte/corpus.hpp"
#include "surftutte/homology.hpp"
#include "surftutte/links.hpp"
#include "surftutte/multivariate.hpp"
#include "surftutte/surface_tutte.hpp"

using namespace surftutte;

namespace {

std::string data(const char* name) { return std::string(SURFTUTTE_DATA_DIR "/") + name; }

struct Outcome {
  bool ok = true;
  std::string note;
  int checked = 0;

  void require(bool cond, const std::string& what) {
    ++checked;
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  void require(const PolynomialReport& r, const std::string& what) {
    ++checked;
    if (!r.passed() && ok) {
      ok = false;
      note = what + "\n" + r.to_text();
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 = no limit
  std::function<void(Outcome&)> run;
};

const std::vector<CombinatorialMap>& corpus_a() {
  static const auto maps = exhaustive_maps(4);
  return maps;
}

const std::vector<CombinatorialMap>& corpus_b() {
  static const auto maps = random_map_corpus(20240501, 500, 0, 12);
  return maps;
}

void figure2(Outcome& out) {
  const auto g1 = p_bruteforce(load_map_file(data("fig2-g1.map"))).to_string();
  const auto g2 = p_bruteforce(load_map_file(data("fig2-g2.map"))).to_string();
  const auto both = p_bruteforce(load_map_file(data("fig2.map"))).to_string();
  out.require(g1 == "1 + B", "P_G1 = " + g1);
  out.require(g2 == "1 + B", "P_G2 = " + g2);
  out.require(both == "2 + B + Y", "P_G1+G2 = " + both);
}

void duality(Outcome& out) {
  for (const auto& m : corpus_a()) out.require(verify_duality(m), "exhaustive " + serialize_map(m));
  for (const auto& m : corpus_b()) out.require(verify_duality(m), "random " + serialize_map(m));
}

void specializations(Outcome& out) {
  for (const auto& m : corpus_b()) out.require(verify_specializations(m), serialize_map(m));
}

void oracles(Outcome& out) {
  auto same = [&](const EmbeddedSubgraph& g) {
    out.require(p_recursive(g) == p_bruteforce(g), "recursive vs state sum " + serialize_map(g));
  };
  for (const auto& m : corpus_a()) {
    const auto g = EmbeddedSubgraph::whole(m);
    same(g);
    out.require(verify_recurrences(g), "recurrences " + serialize_map(m));
  }
  for (const auto& m : corpus_b()) same(EmbeddedSubgraph::whole(m));
  Rng rng(4);
  for (const auto& m : corpus_a()) {
    const auto g = random_embedded_subgraph(rng, m);
    same(g);
    out.require(verify_recurrences(g), "recurrences " + serialize_map(g));
  }
}

void homology_cross_check(Outcome& out) {
  for (const auto& m : corpus_a())
    out.require(verify_homology_cross_check(EmbeddedSubgraph::whole(m)), serialize_map(m));
  for (const auto& m : random_map_corpus(55, 100, 0, 8))
    out.require(verify_homology_cross_check(EmbeddedSubgraph::whole(m)), serialize_map(m));
}

void subgroup_duality(Outcome& out) {
  for (const auto& m : random_map_corpus(66, 100, 0, 8)) out.require(verify_subgroup_duality(m), serialize_map(m));
}

void thistlethwaite(Outcome& out) {
  out.require(verify_thistlethwaite(load_diagram_file(data("trefoil.vlk"))), "trefoil");
  out.require(verify_thistlethwaite(load_diagram_file(data("torus-alt.vlk"))), "torus-alt");
  Rng rng(77);
  for (int genus = 1; genus <= 2; ++genus)
    for (int i = 0; i < 30; ++i) {
      const auto d = random_alternating_diagram(rng, genus, 2, 6);
      out.require(d.genus() == genus, "generated diagram has wrong genus");
      out.require(verify_thistlethwaite(d), serialize_diagram(d));
    }
}

void classical(Outcome& out) {
  const auto trefoil = load_diagram_file(data("trefoil.vlk"));
  const auto code = oracle::from_diagram(trefoil);
  // -t^-4 + t^-3 + t^-1 with t = u^4 = A^-4.
  out.require(oracle::jones_in_a(code) == Poly::parse("-A^16 + A^12 + A^4"), "oracle trefoil Jones");
  out.require(classical_jones(trefoil).to_string() == "-u^-16 + u^-12 + u^-4",
              "trefoil Jones " + classical_jones(trefoil).to_string());

  std::vector<LinkDiagram> corpus;
  for (const char* name : {"trefoil.vlk", "vtrefoil.vlk", "torus-alt.vlk", "unknot.vlk", "torus-loop.vlk"})
    corpus.push_back(load_diagram_file(data(name)));
  Rng rng(88);
  for (int i = 0; i < 60; ++i) {
    auto d = random_alternating_diagram(rng, 0, 1, 7);
    for (int c = 0; c < d.crossing_count(); ++c)
      if (rng.coin()) d = switch_crossing(d, c);
    const auto pd = oracle::from_diagram(d);
    out.require(classical_bracket(d) == oracle::bracket(pd), "bracket " + serialize_diagram(d));
    out.require(classical_jones(d).substitute({{"u", Poly::parse("A^-1")}}) == oracle::jones_in_a(pd),
                "jones " + serialize_diagram(d));
    corpus.push_back(d);
  }
  for (int genus = 1; genus <= 2; ++genus)
    for (int i = 0; i < 20; ++i) corpus.push_back(random_alternating_diagram(rng, genus, 1, 6));
  for (const auto& d : corpus)
    for (const auto& s : states(d)) out.require(s.k + s.r == s.c, "k + r = c " + serialize_diagram(d));
}

void multivariate(Outcome& out) {
  int planar = 0;
  for (const auto& m : random_map_corpus(99, 200, 0, 10)) {
    if (m.genus() == 0) ++planar;
    out.require(verify_multivariate_duality(m, EdgeWeighting::symbolic(m)), serialize_map(m));
  }
  out.require(planar > 0, "no planar members in the corpus");
}

void multiplicativity(Outcome& out) {
  Rng rng(1010);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_map(rng, rng.between(0, 6));
    const auto b = random_map(rng, rng.between(0, 6));
    out.require(verify_multiplicativity(a, b), serialize_map(a) + " / " + serialize_map(b));
  }
  const auto g1 = p_bruteforce(load_map_file(data("fig2-g1.map")));
  const auto g2 = p_bruteforce(load_map_file(data("fig2-g2.map")));
  out.require(p_bruteforce(load_map_file(data("fig2.map"))) != g1 * g2, "figure 2 union is multiplicative");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "figure 2 polynomials", 1, figure2},
      {2, "duality on exhaustive and random maps", 300, duality},
      {3, "Tutte, Bollobas-Riordan and partial-duality specialisations", 0, specializations},
      {4, "recursive evaluator and recurrences", 0, oracles},
      {5, "homology cross-check", 0, homology_cross_check},
      {6, "subgroup duality via the radial map", 600, subgroup_duality},
      {7, "bracket from the Tait polynomial", 0, thistlethwaite},
      {8, "classical bracket and Jones oracle", 0, classical},
      {9, "multivariate duality and planar relation", 300, multivariate},
      {10, "ribbon multiplicativity and figure 2 counterexample", 0, multiplicativity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      out.ok = false;
      out.note = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    std::printf("%s %2d %s (%d checks, %.2f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), out.checked,
                seconds);
    if (!out.ok) {
      std::printf("     %s\n", out.note.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
