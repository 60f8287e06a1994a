// Command-line front end. Line 1 of stdout carries the answer; everything
// else a script might not want goes to stderr.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kim/kim.hpp"

namespace {

using nlohmann::json;
using namespace kim;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct Common {
  bool json = false;
  int threads = 1;
};

json parts_json(const IntervalWitness& w) {
  json out = json::array();
  for (const auto& p : w.parts) out.push_back({p.lo, p.hi});
  return out;
}

void save(const std::string& path, const std::function<void(std::ostream&)>& write) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  write(f);
  if (!f) throw Error(ErrorCode::ParseError, "write to '" + path + "' failed");
}

void save_witness(const std::optional<std::string>& path, const IntervalWitness& w) {
  if (path) save(*path, [&](std::ostream& o) { write_witness(o, w); });
}

void emit_json(const json& j) { std::cout << j.dump() << '\n'; }

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

// ---------------------------------------------------------------- handlers

struct DetectArgs {
  int t = 0;
  std::string graph;
  std::optional<std::string> witness;
};

void run_detect(const Common& c, const DetectArgs& a) {
  const auto g = load_graph(a.graph);
  LayerOptions opt;
  opt.threads = c.threads;
  const auto r = detect_kt(g, a.t, opt);
  if (r.yes) save_witness(a.witness, *r.witness);
  if (c.json) {
    json j{{"answer", yes_no(r.yes)}, {"t", a.t}, {"loglog_f", r.loglog_factor}, {"layer_sizes", r.layer_sizes}};
    if (r.yes) {
      j["path"] = std::string(to_string(*r.path));
      j["witness"] = parts_json(*r.witness);
    }
    emit_json(j);
    return;
  }
  std::cout << yes_no(r.yes) << '\n';
  if (r.yes) std::cerr << "path: " << to_string(*r.path) << '\n';
  else std::cerr << "no K_" << a.t << " up to the guaranteed factor; log2 log2 f(t) = " << r.loglog_factor << '\n';
}

struct DecomposeArgs {
  std::string graph;
  bool dot = false;
  std::optional<std::string> out;
};

void run_decompose(const Common& c, const DecomposeArgs& a) {
  const auto g = load_graph(a.graph);
  const auto tree = labeled_decomposition(g);
  const auto stats = tree_stats(tree);
  std::ostringstream body;
  if (a.dot) write_dot(body, tree);
  else write_tree(body, tree);
  if (a.out) save(*a.out, [&](std::ostream& o) { o << body.str(); });
  if (c.json) {
    json j{{"nodes", stats.nodes},
           {"leaves", tree.leaf_count()},
           {"quotients", stats.quotients},
           {"quotient_edges", stats.quotient_edges},
           {"consecutive_o", has_consecutive_o(tree)}};
    if (!a.out) j["tree"] = body.str();
    emit_json(j);
    return;
  }
  std::cout << stats.nodes << '\n';
  if (!a.out) std::cout << body.str();
}

struct RankArgs {
  std::string graph;
  int cap = 8;
  bool verbose = false;
};

void run_rank(const Common& c, const RankArgs& a) {
  const auto g = load_graph(a.graph);
  LayerOptions opt;
  opt.threads = c.threads;
  if (a.cap < 0) throw Error(ErrorCode::BadParams, "cap must be nonnegative");
  // One extra layer tells an exact answer from a capped one.
  const Layers layers = g_layers(g, a.cap + 1, opt);
  int rank = 0;
  while (rank + 1 <= a.cap && !layers[rank + 1].empty()) ++rank;
  const bool exact = layers[a.cap + 1].empty();
  if (c.json) {
    json sizes = json::array();
    for (const auto& l : layers) sizes.push_back(l.size());
    emit_json({{"rank", rank}, {"exact", exact}, {"cap", a.cap}, {"layer_sizes", sizes}});
  } else {
    std::cout << rank << '\n';
    if (!exact) std::cerr << "capped: rank is at least " << rank << '\n';
  }
  if (a.verbose) write_layer_dump(std::cerr, layers);
}

struct K3Args {
  std::string graph;
  std::optional<std::string> witness;
};

void run_k3(const Common& c, const K3Args& a) {
  const auto g = load_graph(a.graph);
  const auto r = detect_k3(g);
  if (r.yes) save_witness(a.witness, *r.witness);
  if (c.json) {
    json j{{"answer", yes_no(r.yes)}};
    if (r.yes) j["witness"] = parts_json(*r.witness);
    emit_json(j);
  } else {
    std::cout << yes_no(r.yes) << '\n';
  }
}

struct OracleArgs {
  int t = 0;
  std::string graph;
  std::optional<std::string> witness;
  std::uint64_t budget = kDefaultOracleBudget;
};

void run_oracle(const Common& c, const OracleArgs& a) {
  const auto g = load_graph(a.graph);
  const auto r = exact_has_complete_kim(g, a.t, a.budget);
  if (r.yes) save_witness(a.witness, *r.witness);
  if (c.json) {
    json j{{"answer", yes_no(r.yes)}, {"t", a.t}};
    if (r.yes) j["witness"] = parts_json(*r.witness);
    emit_json(j);
  } else {
    std::cout << yes_no(r.yes) << '\n';
  }
}

void run_oracle_max(const Common& c, const OracleArgs& a) {
  const auto g = load_graph(a.graph);
  int size = 0;
  const auto r = exact_max_kim_witness(g, &size, a.budget);
  if (r.witness) save_witness(a.witness, *r.witness);
  if (c.json) {
    json j{{"max", size}};
    if (r.witness) j["witness"] = parts_json(*r.witness);
    emit_json(j);
  } else {
    std::cout << size << '\n';
  }
}

struct ReduceArgs {
  int k = 0;
  std::string graph;
  std::optional<std::string> out;
  std::optional<std::string> decode;
};

void run_reduce(const Common& c, const ReduceArgs& a) {
  const auto ordered = load_graph(a.graph);
  const auto g = Graph::from_sorted_edges(ordered.n(), ordered.edges());
  if (a.decode) {
    const auto clique = decode_witness(g, a.k, load_witness(*a.decode));
    if (c.json) {
      emit_json({{"clique", clique}});
    } else {
      for (std::size_t i = 0; i < clique.size(); ++i) std::cout << (i ? " " : "") << clique[i];
      std::cout << '\n';
    }
    return;
  }
  const auto hat = build_hat(g, a.k);
  if (a.out) save(*a.out, [&](std::ostream& o) { write_graph(o, hat.graph); });
  if (c.json) {
    emit_json({{"t", hat.t}, {"n", hat.graph.n()}, {"m", hat.graph.m()}});
    return;
  }
  std::cout << hat.t << '\n';
  if (!a.out) write_graph(std::cout, hat.graph);
}

struct RamseyArgs {
  std::string coloring;
  std::optional<std::string> witness;
  std::optional<std::string> color_graph;
};

void run_ramsey(const Common& c, const RamseyArgs& a) {
  const auto col = load_coloring(a.coloring);
  const auto r = mono_kim_search(col);
  save_witness(a.witness, r.witness);
  if (a.color_graph) save(*a.color_graph, [&](std::ostream& o) { write_graph(o, col.color_graph(r.color)); });
  if (c.json) {
    emit_json({{"color", color_name(r.color)},
               {"size", r.witness.size()},
               {"guarantee", ramsey_guarantee(col.n())},
               {"rounds", r.rounds},
               {"witness", parts_json(r.witness)}});
    return;
  }
  std::cout << color_name(r.color) << '\n';
  std::cerr << r.witness.size() << " parts after " << r.rounds << " rounds\n";
}

struct GenArgs {
  std::string family;
  std::map<std::string, long long> params;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};

void run_gen(const Common& c, const GenArgs& a) {
  std::string name = a.family;
  for (char& ch : name)
    if (ch == '-') ch = '_';
  Generated made;
  std::optional<bool> base_verified;
  if (name == "ramsey_lb") {
    auto param = [&](const char* key) {
      auto it = a.params.find(key);
      if (it == a.params.end()) throw Error(ErrorCode::BadParams, std::string("ramsey-lb needs --") + key);
      if (it->second < 0 || it->second > 1 << 20) throw Error(ErrorCode::BadParams, std::string(key) + " out of range");
      return static_cast<int>(it->second);
    };
    auto s = gen_substitution_coloring(param("q"), param("k"), a.seed);
    base_verified = s.verified;
    made = std::move(s.coloring);
  } else {
    made = gen_family({name, a.params, a.seed});
  }
  std::ostringstream body;
  int n = 0;
  long long m = -1;
  if (const auto* g = std::get_if<OrderedGraph>(&made)) {
    write_graph(body, *g);
    n = g->n();
    m = g->m();
  } else {
    const auto& col = std::get<EdgeColoring>(made);
    write_coloring(body, col);
    n = col.n();
  }
  if (base_verified && !*base_verified) std::cerr << "note: base colouring too large to check exhaustively\n";
  if (a.out) save(*a.out, [&](std::ostream& o) { o << body.str(); });
  if (c.json) {
    json j{{"n", n}};
    if (m >= 0) j["m"] = m;
    if (base_verified) j["base_verified"] = *base_verified;
    emit_json(j);
    return;
  }
  if (a.out) std::cout << n << '\n';
  else std::cout << body.str();
}

struct VerifyArgs {
  std::string graph;
  std::string witness;
};

void run_verify(const Common& c, const VerifyArgs& a) {
  const auto g = load_graph(a.graph);
  const auto w = load_witness(a.witness);
  bool ok = false;
  std::string why;
  try {
    ok = verify_witness(g, w);
    if (!ok) why = "some pair of parts has no edge between them";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ShapeMismatch) throw;
    why = e.what();
  }
  if (c.json) {
    json j{{"answer", ok ? "OK" : "FAIL"}, {"t", w.size()}};
    if (!ok) j["reason"] = why;
    emit_json(j);
    return;
  }
  std::cout << (ok ? "OK" : "FAIL") << '\n';
  if (!ok) std::cerr << why << '\n';
}

struct BoundsArgs {
  int t = 0;
};

void run_bounds(const Common& c, const BoundsArgs& a) {
  const double ff = loglog_f(a.t);
  if (c.json) {
    json rows = json::array();
    for (int r = 0; r <= 3 * a.t - 2; ++r) {
      const auto g = g_value(a.t, r);
      rows.push_back({{"r", r}, {"a", g.a.str()}, {"b", g.b.str()}, {"value", g.numeric(a.t)}});
    }
    emit_json({{"loglog_f", ff}, {"t", a.t}, {"recurrence_ok", check_recurrence(a.t)}, {"g", rows}});
    return;
  }
  std::cout << ff << '\n';
  for (int r = 0; r <= 3 * a.t - 2; ++r) {
    const auto g = g_value(a.t, r);
    std::cout << r << ' ' << g.str() << ' ' << g.numeric(a.t) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete interval minor tools for ordered graphs"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Print a single-line JSON report instead of plain text");
  app.add_option("--threads", common.threads, "Worker threads for layer expansion")->check(CLI::Range(1, 256));

  std::function<void()> action;

  DetectArgs detect;
  auto* cmd = app.add_subcommand("detect", "Approximate K_t test with a verified witness on YES");
  cmd->add_option("--t", detect.t, "Clique size")->required()->check(CLI::Range(1, 100000));
  cmd->add_option("graph", detect.graph, "Graph file")->required();
  cmd->add_option("--witness,-w", detect.witness, "Write the witness here on YES");
  cmd->callback([&] { action = [&] { run_detect(common, detect); }; });

  DecomposeArgs decompose;
  cmd = app.add_subcommand("decompose", "Labelled distinguishing decomposition; prints the node count");
  cmd->add_option("graph", decompose.graph, "Graph file")->required();
  cmd->add_flag("--dot", decompose.dot, "Emit Graphviz instead of the tree text format");
  cmd->add_option("--out,-o", decompose.out, "Write the tree here instead of stdout");
  cmd->callback([&] { action = [&] { run_decompose(common, decompose); }; });

  RankArgs rank;
  cmd = app.add_subcommand("rank", "Delayed rank, capped");
  cmd->add_option("graph", rank.graph, "Graph file")->required();
  cmd->add_option("--cap", rank.cap, "Highest layer to build")->check(CLI::NonNegativeNumber);
  cmd->add_flag("-v,--verbose", rank.verbose, "Dump layer members to stderr");
  cmd->callback([&] { action = [&] { run_rank(common, rank); }; });

  K3Args k3;
  cmd = app.add_subcommand("k3", "Exact linear-time K_3 test");
  cmd->add_option("graph", k3.graph, "Graph file")->required();
  cmd->add_option("--witness,-w", k3.witness, "Write the witness here on YES");
  cmd->callback([&] { action = [&] { run_k3(common, k3); }; });

  OracleArgs oracle;
  cmd = app.add_subcommand("oracle", "Exact K_t test by enumeration (small inputs)");
  cmd->add_option("--t", oracle.t, "Clique size")->required()->check(CLI::Range(1, 100000));
  cmd->add_option("graph", oracle.graph, "Graph file")->required();
  cmd->add_option("--witness,-w", oracle.witness, "Write the witness here on YES");
  cmd->add_option("--budget", oracle.budget, "Largest number of placements to enumerate");
  cmd->callback([&] { action = [&] { run_oracle(common, oracle); }; });

  OracleArgs oracle_max;
  cmd = app.add_subcommand("oracle-max", "Exact largest complete interval minor (small inputs)");
  cmd->add_option("graph", oracle_max.graph, "Graph file")->required();
  cmd->add_option("--witness,-w", oracle_max.witness, "Write a witness of the maximum here");
  cmd->add_option("--budget", oracle_max.budget, "Largest number of placements per size");
  cmd->callback([&] { action = [&] { run_oracle_max(common, oracle_max); }; });

  ReduceArgs reduce;
  cmd = app.add_subcommand("reduce", "Clique to interval-minor instance; prints the target t");
  cmd->add_option("--k", reduce.k, "Clique size")->required();
  cmd->add_option("graph", reduce.graph, "Graph file (vertex order ignored)")->required();
  cmd->add_option("--out,-o", reduce.out, "Write the instance here instead of stdout");
  cmd->add_option("--decode", reduce.decode, "Read a witness of the instance and print the clique it encodes");
  cmd->callback([&] { action = [&] { run_reduce(common, reduce); }; });

  RamseyArgs ramsey;
  cmd = app.add_subcommand("ramsey", "Monochromatic interval minor in a 2-coloured clique");
  cmd->add_option("coloring", ramsey.coloring, "Colouring file")->required();
  cmd->add_option("--witness,-w", ramsey.witness, "Write the witness here");
  cmd->add_option("--color-graph", ramsey.color_graph, "Write the winning colour class as a graph file");
  cmd->callback([&] { action = [&] { run_ramsey(common, ramsey); }; });

  GenArgs gen;
  std::map<std::string, long long> gen_opts;
  cmd = app.add_subcommand("gen", "Generate a graph or colouring");
  cmd->add_option("family", gen.family,
                  "monotone-biclique, ordered-clique, ordered-path, random-gnm, random-coloring or ramsey-lb")
      ->required();
  for (const char* key : {"t", "n", "m", "q", "k"})
    cmd->add_option_function<long long>(std::string("--") + key, [&gen, key](long long v) { gen.params[key] = v; },
                                        std::string("Family parameter ") + key);
  cmd->add_option("--seed", gen.seed, "Random seed");
  cmd->add_option("--out,-o", gen.out, "Write here instead of stdout (stdout then gets n)");
  cmd->callback([&] { action = [&] { run_gen(common, gen); }; });

  VerifyArgs verify;
  cmd = app.add_subcommand("verify", "Check a plain witness against a graph: OK or FAIL");
  cmd->add_option("graph", verify.graph, "Graph file")->required();
  cmd->add_option("witness", verify.witness, "Witness file")->required();
  cmd->callback([&] { action = [&] { run_verify(common, verify); }; });

  BoundsArgs bounds;
  cmd = app.add_subcommand("bounds", "log2 log2 f(t) and the per-layer budget table");
  cmd->add_option("--t", bounds.t, "Clique size")->required()->check(CLI::Range(1, 100000));
  cmd->callback([&] { action = [&] { run_bounds(common, bounds); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  std::cout.flush();
  return kExitOk;
}
