// surftutte: command-line front end for the library.
//
// Exit status: 0 on success (all verdicts PASS), 1 when a verification
// fails, 2 on usage or input errors.

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "surftutte/corpus.hpp"
#include "surftutte/error.hpp"
#include "surftutte/homology.hpp"
#include "surftutte/invariants.hpp"
#include "surftutte/links.hpp"
#include "surftutte/map.hpp"
#include "surftutte/multivariate.hpp"
#include "surftutte/surface_tutte.hpp"

#ifndef SURFTUTTE_DEFAULT_DATA_DIR
#define SURFTUTTE_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace surftutte;

namespace {

const char* kGrammar = R"(
Map files (.map):
  sigma: (1 5 2 8)(3 7 4 6)      vertex rotations, counterclockwise, darts 1..2m
  alpha: (1 2)(3 4)(5 6)(7 8)    edge pairing
  isolated: 0                    optional count of isolated vertices (ids 2m+1..)
  graph_vertices: 1 3            optional; vertices named by their smallest dart
  graph_edges: 1 3               optional; edges named by their smallest dart
  Without graph_* fields the graph is the whole map. '#' starts a comment.

Link files (.vlk):
  crossing 1: darts (1 2 3 4) over (1 3)   counterclockwise darts, over strand
  alpha: (1 6)(2 7)...                     darts joined along strands
  orient: 1 5                              optional; one outgoing dart per strand
  free: 1                                  optional trivial circles
  Crossingless diagrams may instead give a surface and closed walks on it:
  surface_sigma: (1 3 2 4)
  surface_alpha: (1 2)(3 4)
  loop: 1

Polynomials print with terms ordered by total degree, e.g. "2 + A + B".
)";

struct Options {
  std::vector<std::string> files;
  int cap = kDefaultEdgeCap;
  bool recursive = false;
  bool bruteforce = false;
  std::string weights;
  std::uint64_t seed = 1;
  bool json = false;
  int threads = 0;
  std::string data = SURFTUTTE_DEFAULT_DATA_DIR;
  bool classical = false;
  bool tilde = false;
  int count = 10;
  int min_edges = 1;
  int max_edges = 8;
  int genus = -1;
  bool diagrams = false;
  std::string out;
};

struct Output {
  json doc = json::object();
  std::string text;
};

EvalOptions eval_options(const Options& o) { return EvalOptions{o.cap, true}; }

CombinatorialMap require_cellulation(const EmbeddedSubgraph& g) {
  if (!g.is_cellulation())
    throw Error(ErrorCode::NotCellulation, "this command needs the whole map (no graph_vertices/graph_edges)");
  return g.host();
}

const std::string& single_file(const Options& o) {
  if (o.files.size() != 1) throw CLI::ValidationError("expected exactly one input file");
  return o.files[0];
}

void put_poly(Output& out, const std::string& name, const Poly& p) {
  out.text += p.to_string() + "\n";
  out.doc[name] = p.to_string();
}

json report_json(const PolynomialReport& r) {
  json j = json::object();
  j["pass"] = r.passed();
  json polys = json::object();
  for (const auto& [name, p] : r.polynomials) polys[name] = p.to_string();
  j["polynomials"] = polys;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json e = {{"name", v.name}, {"pass", v.pass}};
    if (!v.pass) {
      e["detail"] = v.detail;
      e["witness"] = v.witness;
    }
    verdicts.push_back(e);
  }
  j["verdicts"] = verdicts;
  return j;
}

int finish_report(Output& out, const PolynomialReport& r) {
  out.text += r.to_text();
  out.text += r.passed() ? "PASS\n" : "FAIL\n";
  out.doc = report_json(r);
  return r.passed() ? 0 : 1;
}

json tilde_json(const std::map<Subspace, Poly>& t) {
  json arr = json::array();
  for (const auto& [v, p] : t) arr.push_back({{"subspace", v.to_string()}, {"dim", v.dim()}, {"polynomial", p.to_string()}});
  return arr;
}

// ---------------------------------------------------------------------------

int cmd_poly(const Options& o, Output& out) {
  const auto g = load_map_file(single_file(o));
  Poly p;
  if (o.recursive) {
    p = p_recursive(g);
  } else if (o.bruteforce || g.graph_edge_count() <= o.cap) {
    try {
      p = p_bruteforce(g, eval_options(o));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TooManyEdges) throw Error(e.code(), std::string(e.what()) + " (use --recursive)");
      throw;
    }
  } else {
    throw Error(ErrorCode::TooManyEdges, std::to_string(g.graph_edge_count()) + " edges exceed the cap of " +
                                             std::to_string(o.cap) + " (use --recursive or raise --cap)");
  }
  put_poly(out, "P", p);
  return 0;
}

int cmd_tutte(const Options& o, Output& out) {
  put_poly(out, "T", tutte(underlying_graph(load_map_file(single_file(o))), std::max(o.cap, 24)));
  return 0;
}

int cmd_br(const Options& o, Output& out) {
  put_poly(out, "BR", bollobas_riordan(require_cellulation(load_map_file(single_file(o))), eval_options(o)));
  return 0;
}

int cmd_pprime(const Options& o, Output& out) {
  put_poly(out, "Pprime", p_prime(require_cellulation(load_map_file(single_file(o))), eval_options(o)));
  return 0;
}

EdgeWeighting weights_for(const Options& o, const CombinatorialMap& host) {
  return o.weights.empty() ? EdgeWeighting::symbolic(host) : EdgeWeighting::load(o.weights, host);
}

int cmd_pbar(const Options& o, Output& out) {
  const auto g = load_map_file(single_file(o));
  put_poly(out, "Pbar", p_bar(g, weights_for(o, g.host()), eval_options(o)));
  return 0;
}

int cmd_tildep(const Options& o, Output& out) {
  const auto t = tilde_p(load_map_file(single_file(o)), eval_options(o));
  out.text += to_string(t);
  out.doc["terms"] = tilde_json(t);
  return 0;
}

int cmd_invariants(const Options& o, Output& out) {
  const auto g = load_map_file(single_file(o));
  if (g.graph_edge_count() > o.cap)
    throw Error(ErrorCode::TooManyEdges, std::to_string(g.graph_edge_count()) + " edges exceed the cap of " + std::to_string(o.cap));
  const InvariantContext ctx(g);
  out.text += "# mask c n bc s s_perp k l\n";
  json rows = json::array();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ctx.edge_count()); ++mask) {
    const auto i = ctx.compute(mask);
    std::ostringstream line;
    line << mask << ' ' << i.c << ' ' << i.n << ' ' << i.bc << ' ' << i.s << ' ' << i.s_perp << ' ' << i.k << ' ' << i.l;
    out.text += line.str() + "\n";
    rows.push_back({{"mask", mask}, {"c", i.c}, {"n", i.n}, {"bc", i.bc}, {"s", i.s}, {"s_perp", i.s_perp}, {"k", i.k}, {"l", i.l}});
  }
  out.doc["subgraphs"] = rows;
  return 0;
}

int cmd_dual(const Options& o, Output& out) {
  const auto text = serialize_map(dual(require_cellulation(load_map_file(single_file(o)))));
  out.text += text;
  out.doc["map"] = text;
  return 0;
}

int cmd_canon(const Options& o, Output& out) {
  const auto code = to_hex(canonical_code(load_map_file(single_file(o))));
  out.text += code + "\n";
  out.doc["code"] = code;
  return 0;
}

LinkOptions link_options(const Options& o) {
  return LinkOptions{o.cap == kDefaultEdgeCap ? kDefaultCrossingCap : o.cap, true};
}

int cmd_bracket(const Options& o, Output& out) {
  const auto d = load_diagram_file(single_file(o));
  if (o.tilde) {
    const auto t = tilde_kauffman(d, link_options(o));
    out.text += to_string(t);
    out.doc["terms"] = tilde_json(t);
  } else if (o.classical) {
    put_poly(out, "bracket", classical_bracket(d, link_options(o)));
  } else {
    put_poly(out, "K", kauffman(d, link_options(o)));
  }
  return 0;
}

int cmd_jones(const Options& o, Output& out) {
  const auto d = load_diagram_file(single_file(o));
  if (o.tilde) {
    const auto t = tilde_jones(d, link_options(o));
    out.text += to_string(t);
    out.doc["terms"] = tilde_json(t);
  } else if (o.classical) {
    put_poly(out, "V", classical_jones(d, link_options(o)));
  } else {
    put_poly(out, "J", jones(d, link_options(o)));
  }
  out.doc["writhe"] = writhe(d);
  return 0;
}

int cmd_tait(const Options& o, Output& out) {
  const auto t = tait_graph(load_diagram_file(single_file(o)));
  const auto text = serialize_map(t.map);
  out.text += text;
  out.doc["map"] = text;
  out.doc["genus"] = t.map.genus();
  return 0;
}

// ---------------------------------------------------------------------------

PolynomialReport run_verifier(const std::string& which, const std::string& file, const Options& o) {
  if (which == "thistlethwaite") return verify_thistlethwaite(load_diagram_file(file), link_options(o));
  const auto g = load_map_file(file);
  PolynomialReport r;
  if (which == "duality") {
    r = verify_duality(require_cellulation(g), eval_options(o));
  } else if (which == "special") {
    r = verify_specializations(require_cellulation(g), eval_options(o));
    r.append(verify_recurrences(g, eval_options(o)));
  } else if (which == "mduality") {
    const auto m = require_cellulation(g);
    const auto w = weights_for(o, m);
    r = verify_multivariate_duality(m, w, eval_options(o));
    r.append(verify_multivariate_specializations(g, w, eval_options(o)));
  } else if (which == "subgroup-duality") {
    r = verify_subgroup_duality(require_cellulation(g), eval_options(o));
    r.append(verify_homology_cross_check(g, eval_options(o)));
  } else {
    throw CLI::ValidationError("unknown verifier '" + which + "'");
  }
  return r;
}

int cmd_verify(const std::string& which, const Options& o, Output& out) {
  return finish_report(out, run_verifier(which, single_file(o), o));
}

int cmd_verify_all(const Options& o, Output& out) {
  std::vector<std::pair<std::string, std::string>> runs;  // verifier, file
  const fs::path dir(o.data);
  if (!fs::is_directory(dir)) throw Error(ErrorCode::MalformedInput, "data directory " + o.data + " not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    if (f.extension() == ".map") {
      const auto g = load_map_file(f.string());
      if (g.is_cellulation())
        for (const char* v : {"duality", "special", "mduality", "subgroup-duality"}) runs.push_back({v, f.string()});
      else
        runs.push_back({"subgroup-duality-cross-check", f.string()});
    } else if (f.extension() == ".vlk") {
      const auto d = load_diagram_file(f.string());
      try {
        tait_graph(d);
        runs.push_back({"thistlethwaite", f.string()});
      } catch (const Error&) {
        runs.push_back({"bracket-consistency", f.string()});
      }
    }
  }

  bool all = true;
  json rows = json::array();
  auto record = [&](const std::string& name, const std::string& input, const PolynomialReport& r) {
    all = all && r.passed();
    out.text += std::string(r.passed() ? "PASS " : "FAIL ") + name + " " + input + "\n";
    if (!r.passed()) out.text += r.to_text();
    json j = report_json(r);
    j["check"] = name;
    j["input"] = input;
    rows.push_back(j);
  };
  for (const auto& [which, file] : runs) {
    const std::string name = fs::path(file).filename().string();
    if (which == "subgroup-duality-cross-check") {
      record("homology-cross-check", name, verify_homology_cross_check(load_map_file(file), eval_options(o)));
    } else if (which == "bracket-consistency") {
      const auto d = load_diagram_file(file);
      PolynomialReport r;
      r.check_equal("tilde-specialises", specialize(tilde_kauffman(d, link_options(o))), kauffman(d, link_options(o)),
                    serialize_diagram(d));
      for (const auto& s : states(d, link_options(o).cap))
        if (s.k + s.r != s.c) r.check("k-plus-r", false, "state " + std::to_string(s.choice), serialize_diagram(d));
      record("bracket", name, r);
    } else {
      record(which, name, run_verifier(which, file, o));
    }
  }

  Rng rng(o.seed);
  for (int i = 0; i < o.count; ++i) {
    const auto m = random_map(rng, rng.between(o.min_edges, std::min(o.max_edges, 10)));
    const std::string name = "random-map-" + std::to_string(i);
    auto r = verify_duality(m, eval_options(o));
    r.append(verify_specializations(m, eval_options(o)));
    r.append(verify_subgroup_duality(m, eval_options(o)));
    r.append(verify_multivariate_duality(m, EdgeWeighting::symbolic(m), eval_options(o)));
    r.append(verify_recurrences(EmbeddedSubgraph::whole(m), eval_options(o)));
    record("maps", name, r);
  }
  for (int i = 0; i < o.count; ++i) {
    const auto d = random_alternating_diagram(rng, i % 3, 2, 5);
    record("thistlethwaite", "random-diagram-" + std::to_string(i), verify_thistlethwaite(d, link_options(o)));
  }
  out.text += all ? "PASS\n" : "FAIL\n";
  out.doc = json{{"pass", all}, {"runs", rows}};
  return all ? 0 : 1;
}

int cmd_corpus(const Options& o, Output& out) {
  Rng rng(o.seed);
  if (!o.out.empty()) fs::create_directories(o.out);
  json items = json::array();
  for (int i = 0; i < o.count; ++i) {
    std::string text, ext;
    if (o.diagrams) {
      const int genus = o.genus >= 0 ? o.genus : i % 3;
      text = serialize_diagram(random_alternating_diagram(rng, genus, std::max(o.min_edges, 1), o.max_edges));
      ext = ".vlk";
    } else {
      CombinatorialMap m;
      do {
        m = random_map(rng, rng.between(o.min_edges, o.max_edges));
      } while (o.genus >= 0 && m.genus() != o.genus);
      text = serialize_map(m);
      ext = ".map";
    }
    char name[32];
    std::snprintf(name, sizeof name, "%s-%03d", o.diagrams ? "diagram" : "map", i);
    if (!o.out.empty()) {
      std::ofstream f(fs::path(o.out) / (std::string(name) + ext));
      f << text;
    } else {
      out.text += "# " + std::string(name) + "\n" + text + "\n";
    }
    items.push_back({{"name", name}, {"text", text}});
  }
  if (!o.out.empty()) out.text += "wrote " + std::to_string(o.count) + " files to " + o.out + "\n";
  out.doc["items"] = items;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surface Tutte polynomials, graph and link invariants on surfaces"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "edge/crossing cap for state sums");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--threads", o.threads, "worker threads (default: all cores)");
  };
  auto add_file = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", o.files, what)->required()->check(CLI::ExistingFile);
    add_common(sub);
  };

  auto* poly = app.add_subcommand("poly", "surface Tutte polynomial P_G(X,Y,A,B)");
  add_file(poly, "map file");
  auto* rec = poly->add_flag("--recursive", o.recursive, "contraction-deletion evaluator");
  poly->add_flag("--bruteforce", o.bruteforce, "state sum over all subgraphs (default)")->excludes(rec);

  add_file(app.add_subcommand("tutte", "Tutte polynomial of the underlying graph"), "map file");
  add_file(app.add_subcommand("br", "Bollobas-Riordan polynomial of the ribbon graph"), "map file");
  add_file(app.add_subcommand("pprime", "ribbon-graph polynomial P'"), "map file");
  auto* pbar = app.add_subcommand("pbar", "multivariate polynomial with edge weights");
  add_file(pbar, "map file");
  pbar->add_option("--weights", o.weights, "weights file: lines 'edge <id> = <monomial>'")->check(CLI::ExistingFile);
  add_file(app.add_subcommand("tildep", "polynomial with homology-subspace coefficients"), "map file");
  add_file(app.add_subcommand("invariants", "per-subgraph invariants: mask c n bc s s_perp k l"), "map file");
  add_file(app.add_subcommand("dual", "dual map"), "map file");
  add_file(app.add_subcommand("canon", "canonical code (hex)"), "map file");

  auto* bracket = app.add_subcommand("bracket", "generalised Kauffman bracket K_D(A,B,d,Z)");
  add_file(bracket, "link file");
  bracket->add_flag("--classical", o.classical, "classical bracket in A (unknot = 1)");
  bracket->add_flag("--tilde", o.tilde, "coefficients indexed by homology subspaces");
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial J(u,Z) with t = u^4");
  add_file(jones_cmd, "link file");
  jones_cmd->add_flag("--classical", o.classical, "classical Jones polynomial in u (unknot = 1)");
  jones_cmd->add_flag("--tilde", o.tilde, "coefficients indexed by homology subspaces");
  add_file(app.add_subcommand("tait", "Tait graph of an alternating diagram"), "link file");

  auto* verify = app.add_subcommand("verify", "check identities");
  verify->require_subcommand(1);
  std::string which;
  const std::pair<const char*, const char*> checks[] = {
      {"duality", "P_G against P_G* and the dual subgraph exponents"},
      {"special", "Tutte, Bollobas-Riordan, P' and partial dualities; recurrences"},
      {"mduality", "multivariate duality and specialisations"},
      {"subgroup-duality", "V(H*) = V(H)^perp through the radial map; homology cross-check"},
      {"thistlethwaite", "bracket of an alternating diagram from its Tait graph"},
  };
  for (const auto& [name, help] : checks) {
    auto* v = verify->add_subcommand(name, help);
    add_file(v, "input file");
    if (std::string(name) == "mduality")
      v->add_option("--weights", o.weights, "weights file")->check(CLI::ExistingFile);
  }
  auto* all = verify->add_subcommand("all", "every verifier over the bundled data and a seeded corpus");
  add_common(all);
  all->add_option("--data", o.data, "directory with bundled .map/.vlk files");
  all->add_option("--seed", o.seed, "corpus seed");
  all->add_option("--count", o.count, "random maps and diagrams to add");

  auto* corpus = app.add_subcommand("corpus", "generate random maps or alternating diagrams");
  add_common(corpus);
  corpus->add_option("--seed", o.seed, "seed");
  corpus->add_option("--count", o.count, "number of items");
  corpus->add_option("--min-edges", o.min_edges, "smallest edge (crossing) count");
  corpus->add_option("--max-edges", o.max_edges, "largest edge (crossing) count");
  corpus->add_option("--genus", o.genus, "fixed genus (default: any for maps, 0-2 cycling for diagrams)");
  corpus->add_flag("--diagrams", o.diagrams, "alternating diagrams instead of maps");
  corpus->add_option("--out", o.out, "write one file per item into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);

  Output out;
  int status = 0;
  try {
    if (poly->parsed()) status = cmd_poly(o, out);
    else if (app.got_subcommand("tutte")) status = cmd_tutte(o, out);
    else if (app.got_subcommand("br")) status = cmd_br(o, out);
    else if (app.got_subcommand("pprime")) status = cmd_pprime(o, out);
    else if (pbar->parsed()) status = cmd_pbar(o, out);
    else if (app.got_subcommand("tildep")) status = cmd_tildep(o, out);
    else if (app.got_subcommand("invariants")) status = cmd_invariants(o, out);
    else if (app.got_subcommand("dual")) status = cmd_dual(o, out);
    else if (app.got_subcommand("canon")) status = cmd_canon(o, out);
    else if (bracket->parsed()) status = cmd_bracket(o, out);
    else if (jones_cmd->parsed()) status = cmd_jones(o, out);
    else if (app.got_subcommand("tait")) status = cmd_tait(o, out);
    else if (corpus->parsed()) status = cmd_corpus(o, out);
    else if (all->parsed()) status = cmd_verify_all(o, out);
    else
      for (auto* v : verify->get_subcommands())
        if (v->parsed()) status = cmd_verify(v->get_name(), o, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.json)
    std::cout << out.doc.dump(2) << "\n";
  else
    std::cout << out.text;
  return status;
}
