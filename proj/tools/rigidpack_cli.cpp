// rigidpack command-line driver.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rigidpack/connectivity.hpp"
#include "rigidpack/constructions.hpp"
#include "rigidpack/errors.hpp"
#include "rigidpack/graph.hpp"
#include "rigidpack/matroid.hpp"
#include "rigidpack/orientation.hpp"
#include "rigidpack/parallel.hpp"
#include "rigidpack/random.hpp"
#include "rigidpack/rigidity.hpp"
#include "rigidpack/stochastic.hpp"

using nlohmann::json;
using namespace rigidpack;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t threads = 0;  // 0: take RIGIDPACK_THREADS, else 1
  bool verify = false;
};

std::size_t resolve_threads(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* s = std::getenv("RIGIDPACK_THREADS")) {
    try {
      const long v = std::stol(s);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Input text from --input or stdin.
std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Graph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_graph(in);
}

ArcSet load_arcs(const std::string& path) {
  std::istringstream in(slurp(path));
  ArcSet d;
  d.arcs = read_arcs(in, d.n);
  return d;
}

json envelope(const std::string& object, std::uint64_t seed) {
  return json{{"schema", 1}, {"object", object}, {"seed", seed}, {"stats", json::object()},
              {"certificates", json::object()}};
}

json graph_stats(const Graph& g) { return {{"n", g.num_vertices()}, {"m", g.num_edges()}}; }

json edge_pairs(const Graph& g, const std::vector<EdgeId>& ids) {
  json out = json::array();
  for (EdgeId e : ids) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

json cut_json(const ConnectivityVerdict& v) {
  json c{{"connected", v.connected}, {"reason", v.reason}};
  if (v.cut) {
    c["separator"] = v.cut->separator;
    c["source"] = v.cut->source;
    c["target"] = v.cut->target;
    c["directed"] = v.cut->directed;
  }
  return c;
}

/// Objects go to --output (or stdout); the report always ends stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParseError(0, "cannot write " + path);
    }
  }
  std::ostream& objects() { return file_ ? *file_ : std::cout; }
  void report(const json& j) { std::cout << j.dump(2) << '\n'; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_parts(Sink& sink, const Graph& host, const std::vector<std::vector<EdgeId>>& parts) {
  for (const auto& p : parts) write_graph(sink.objects(), host.subgraph(p));
}

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(0, "bad vertex id '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(0, "bad vertex id '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

struct GenArgs {
  std::size_t n = 0, k = 0, d = 0, t = 2, s = 0;
  double p = 0.5;
  std::uint64_t stream = 0;
  std::vector<std::size_t> dims;
  std::string host;
};

int emit_witness(Sink& sink, const Common& c, const std::string& kind, const PackingWitness& w) {
  write_graph(sink.objects(), w.host);
  json r = envelope("gen/" + kind, c.seed);
  r["stats"] = graph_stats(w.host);
  r["stats"]["dimension"] = w.dimension;
  json parts = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    const auto& part = w.parts[i];
    json pj{{"label", part.label}, {"claim", part.claim}, {"size", part.edges.size()},
            {"edges", edge_pairs(w.host, part.edges)}};
    if (c.verify) {
      const bool ok = part.claim == "spanning-tree" ? is_spanning_tree(w.host, part.edges)
                                                    : RigidityOracle(w.host, w.dimension, c.seed, i + 1)
                                                          .is_d_rigid(part.edges);
      pj["verified"] = ok;
      all_ok = all_ok && ok;
    }
    parts.push_back(std::move(pj));
  }
  r["certificates"]["parts"] = std::move(parts);
  if (c.verify) r["certificates"]["verified"] = all_ok;
  sink.report(r);
  return all_ok ? kOk : kFailed;
}

int run_gen_graph(Sink& sink, const Common& c, const std::string& kind, const Graph& g, json extra,
                  std::optional<std::size_t> claim_k) {
  write_graph(sink.objects(), g);
  json r = envelope("gen/" + kind, c.seed);
  r["stats"] = graph_stats(g);
  for (auto& [key, val] : extra.items()) r["stats"][key] = val;
  bool ok = true;
  if (c.verify && claim_k) {
    auto v = is_k_connected(g, *claim_k, resolve_threads(c.threads));
    r["certificates"]["connectivity"] = cut_json(v);
    r["certificates"]["verified"] = v.connected;
    ok = v.connected;
  }
  sink.report(r);
  return ok ? kOk : kFailed;
}

int cmd_rank(const Common& c, std::size_t d, bool as_json) {
  Graph g = load_graph(c.input);
  RigidityOracle o(g, d, c.seed, 0);
  const std::size_t r = o.rank_all();
  if (!as_json) {
    std::cout << r << '\n';
    return kOk;
  }
  json j = envelope("rank", c.seed);
  j["stats"] = graph_stats(g);
  j["stats"]["dimension"] = d;
  j["rank"] = r;
  j["certificates"]["d_rigid"] = g.num_vertices() >= 1 && r == complete_graph_rank(g.num_vertices(), d);
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int report_packing(const Common& c, const std::string& object, const Graph& g, const PackingReport& rep,
                   const std::vector<std::string>& labels) {
  Sink sink(c.output);
  json j = envelope(object, c.seed);
  j["stats"] = graph_stats(g);
  j["stats"]["dimension"] = rep.dimension;
  j["stats"]["total"] = rep.total;
  j["stats"]["required"] = rep.required;
  std::vector<std::size_t> sizes;
  for (const auto& p : rep.parts) sizes.push_back(p.size());
  j["sizes"] = sizes;
  j["targets"] = rep.targets;
  j["success"] = rep.success;
  j["verified"] = rep.verified;
  j["certificates"]["labels"] = labels;
  if (!rep.success) j["certificates"]["deficiency"] = rep.deficiency();
  if (rep.success) write_parts(sink, g, rep.parts);
  sink.report(j);
  return rep.success && rep.verified ? kOk : kFailed;
}

int cmd_pack(const Common& c, std::size_t d, std::size_t t) {
  Graph g = load_graph(c.input);
  auto rep = pack_rigid(g, d, t, c.seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t; ++i) labels.push_back("G_" + std::to_string(i + 1));
  return report_packing(c, "pack", g, rep, labels);
}

int cmd_kriesell(const Common& c, std::size_t d) {
  Graph g = load_graph(c.input);
  auto rep = pack_tree_rigid(g, d, c.seed);
  return report_packing(c, "kriesell", g, rep, {"T", "G_0"});
}

int cmd_orient(const Common& c, std::size_t k, const std::string& r_ids) {
  Graph g = load_graph(c.input);
  OrientationOptions opts;
  opts.seed = c.seed;
  opts.verify = c.verify;
  opts.threads = resolve_threads(c.threads);
  if (!r_ids.empty()) opts.r_override = parse_ids(r_ids);
  json j = envelope("orient", c.seed);
  j["stats"] = graph_stats(g);
  j["stats"]["k"] = k;
  try {
    auto rep = k_connected_orientation(g, k, opts);
    Sink sink(c.output);
    write_digraph(sink.objects(), rep.orientation);
    j["d"] = rep.dimension;
    j["R"] = rep.r.members;
    std::vector<std::size_t> sizes;
    for (const auto& b : rep.bases) sizes.push_back(b.size());
    j["base_sizes"] = sizes;
    j["certificates"]["in_degrees_match"] = rep.in_degrees_match;
    j["certificates"]["out_degrees_match"] = rep.out_degrees_match;
    bool ok = k < 2 || (rep.in_degrees_match && rep.out_degrees_match);
    if (rep.verified) {
      j["certificates"]["connectivity"] = cut_json(*rep.verified);
      ok = ok && rep.verified->connected;
    }
    j["verified"] = rep.verified ? json(ok) : json(nullptr);
    sink.report(j);
    return ok ? kOk : kFailed;
  } catch (const PackingInfeasible& e) {
    j["error"] = e.what();
    j["certificates"]["packing"] = {{"total", e.report().total},
                                    {"required", e.report().required},
                                    {"deficiency", e.report().deficiency()}};
  } catch (const BridgeError& e) {
    j["error"] = e.what();
    j["certificates"]["bridge"] = e.bridge() ? json{e.bridge()->u, e.bridge()->v} : json(nullptr);
  } catch (const OrientationError& e) {
    j["error"] = e.what();
    j["certificates"]["violating_set"] = e.certificate().violating;
  }
  std::cout << j.dump(2) << '\n';
  return kFailed;
}

int cmd_verify(const Common& c, std::size_t k, bool digraph) {
  const std::size_t threads = resolve_threads(c.threads);
  json j = envelope(digraph ? "verify/digraph" : "verify/graph", c.seed);
  ConnectivityVerdict v;
  if (digraph) {
    ArcSet d = load_arcs(c.input);
    j["stats"] = {{"n", d.n}, {"m", d.arcs.size()}};
    v = is_k_connected(d, k, threads);
  } else {
    Graph g = load_graph(c.input);
    j["stats"] = graph_stats(g);
    v = is_k_connected(g, k, threads);
  }
  j["stats"]["k"] = k;
  j["certificates"]["connectivity"] = cut_json(v);
  j["verified"] = v.connected;
  std::cout << j.dump(2) << '\n';
  return v.connected ? kOk : kFailed;
}

json sim_result(const std::string& kind, const Common& c, std::size_t trials, double estimate, double stderr_,
                double bound, bool verdict) {
  json j = envelope("simulate/" + kind, c.seed);
  j["stats"]["trials"] = trials;
  j["estimate"] = estimate;
  j["stderr"] = stderr_;
  j["bound"] = bound;
  j["verdict"] = verdict ? "pass" : "fail";
  return j;
}

struct SimArgs {
  std::size_t trials = 1000;
  std::size_t setsize = 10, ordering_d = 3;
  std::size_t n = 0, d = 2, t = 1;
  double p = 0.5, eta = 0.3;
  bool grid = false;
};

int cmd_sim_ordering(const Common& c, const SimArgs& a) {
  const std::size_t threads = resolve_threads(c.threads);
  auto exact = min_order_expectation_exact(a.setsize, a.ordering_d);
  auto mc = min_order_expectation_montecarlo(a.setsize, a.ordering_d, a.trials, c.seed, threads);
  const bool ok = std::abs(mc.mean - exact.value()) <= 3.0 * mc.standard_error + 1e-12;
  json j = sim_result("ordering", c, a.trials, mc.mean, mc.standard_error, exact.value(), ok);
  j["stats"]["setsize"] = a.setsize;
  j["stats"]["d"] = a.ordering_d;
  j["certificates"]["exact"] = to_string(exact);
  std::cout << j.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

int cmd_sim_e0(const Common& c, const SimArgs& a) {
  Graph g = c.input.empty() && a.n > 0 ? Graph::complete(a.n) : load_graph(c.input);
  auto est = estimate_E0_mean(g, a.d, a.t, a.trials, c.seed, resolve_threads(c.threads));
  json j = sim_result("e0", c, a.trials, est.estimate.mean, est.estimate.standard_error, est.bound, est.passes());
  j["stats"]["n"] = g.num_vertices();
  j["stats"]["d"] = a.d;
  j["stats"]["t"] = a.t;
  j["certificates"]["hypothesis_met"] = est.hypothesis_met;
  auto sample = build_E0(g, a.d, a.t, c.seed, 0);
  j["certificates"]["stream0_size"] = sample.e0.size();
  j["certificates"]["stream0_independent"] = e0_independent(g, sample, c.seed);
  std::cout << j.dump(2) << '\n';
  return est.passes() ? kOk : kFailed;
}

int cmd_sim_gpd(const Common& c, const SimArgs& a) {
  Graph g = c.input.empty() && a.n > 0 ? Graph::complete(a.n) : load_graph(c.input);
  const std::size_t n = g.num_vertices();
  std::vector<char> ok(a.trials, 0);
  parallel_for(a.trials, resolve_threads(c.threads), [&](std::size_t i) {
    SeededStream rng(c.seed, i);
    auto perm = rng.permutation(n);
    VertexOrdering pi(std::vector<Vertex>(perm.begin(), perm.end()));
    ok[i] = check_GpiD_independent(g, pi, a.d, c.seed + i) ? 1 : 0;
  });
  std::vector<double> samples(ok.begin(), ok.end());
  auto est = summarize(samples);
  std::size_t good = 0;
  for (char x : ok) good += x;
  const bool verdict = good == a.trials;
  json j = sim_result("gpd", c, a.trials, est.mean, est.standard_error, 1.0, verdict);
  j["stats"]["n"] = n;
  j["stats"]["d"] = a.d;
  j["certificates"]["independent_orders"] = good;
  std::cout << j.dump(2) << '\n';
  return verdict ? kOk : kFailed;
}

json chernoff_json(const ChernoffCheck& x) {
  return {{"n", x.n},       {"p", x.p}, {"eta", x.eta}, {"estimate", x.tail.mean}, {"stderr", x.tail.standard_error},
          {"bound", x.bound}, {"verdict", x.passes() ? "pass" : "fail"}};
}

int cmd_sim_chernoff(const Common& c, const SimArgs& a) {
  if (a.grid) {
    auto grid = chernoff_grid(a.trials, c.seed, resolve_threads(c.threads));
    bool all = true;
    std::size_t worst = 0;
    json points = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      all = all && grid[i].passes();
      if (grid[i].tail.mean - grid[i].bound > grid[worst].tail.mean - grid[worst].bound) worst = i;
      points.push_back(chernoff_json(grid[i]));
    }
    const auto& w = grid[worst];
    json j = sim_result("chernoff", c, a.trials, w.tail.mean, w.tail.standard_error, w.bound, all);
    j["certificates"]["worst_point"] = worst;
    j["certificates"]["grid"] = std::move(points);
    std::cout << j.dump(2) << '\n';
    return all ? kOk : kFailed;
  }
  if (a.n == 0) throw PreconditionError("--n is required unless --grid is given");
  auto x = chernoff_check(a.n, a.p, a.eta, a.trials, c.seed, 0);
  json j = sim_result("chernoff", c, a.trials, x.tail.mean, x.tail.standard_error, x.bound, x.passes());
  j["stats"]["n"] = a.n;
  j["stats"]["p"] = a.p;
  j["stats"]["eta"] = a.eta;
  std::cout << j.dump(2) << '\n';
  return x.passes() ? kOk : kFailed;
}

void add_common(CLI::App* app, Common& c, bool io = true) {
  if (io) {
    app->add_option("-i,--input", c.input, "edge-list input file (default stdin)");
    app->add_option("-o,--output", c.output, "file for emitted graphs (default stdout)");
  }
  app->add_option("--seed", c.seed, "64-bit seed")->default_val(0);
  app->add_option("--threads", c.threads, "worker threads (overrides RIGIDPACK_THREADS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigidpack: rigid packings and k-connected orientations"};
  app.require_subcommand(1);
  Common c;
  int code = kOk;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph (and witness JSON)");
  gen->require_subcommand(1);
  GenArgs ga;
  std::string gen_kind;
  auto gen_sub = [&](const std::string& name, const std::string& help) {
    auto* s = gen->add_subcommand(name, help);
    s->add_option("-o,--output", c.output, "file for the graph (default stdout)");
    s->add_option("--seed", c.seed, "64-bit seed")->default_val(0);
    s->add_option("--threads", c.threads, "worker threads");
    s->add_flag("--verify", c.verify, "verify the claimed properties");
    s->callback([&, name] { gen_kind = name; });
    return s;
  };
  gen_sub("complete", "complete graph K_n")->add_option("--n", ga.n)->required();
  {
    auto* s = gen_sub("harary", "K-regular K-connected circulant on n vertices");
    s->add_option("--k", ga.k)->required();
    s->add_option("--n", ga.n)->required();
  }
  {
    auto* s = gen_sub("lovasz-yemini", "vertex-splitting example without a rigid packing");
    s->add_option("--dims", ga.dims, "dimensions d_1 ... d_t")->required()->delimiter(',');
    s->add_option("--s", ga.s, "half the host order")->required();
    s->add_option("--host", ga.host, "K-regular host edge list (default Harary)");
  }
  {
    auto* s = gen_sub("tdrigid-pack", "K_n with t explicit disjoint d-rigid subgraphs");
    s->add_option("--n", ga.n)->required();
    s->add_option("--d", ga.d)->required();
    s->add_option("--t", ga.t)->default_val(2);
  }
  {
    auto* s = gen_sub("tree-rigid", "K_n split into a spanning tree and a d-rigid subgraph");
    s->add_option("--n", ga.n)->required();
    s->add_option("--d", ga.d)->required();
  }
  {
    auto* s = gen_sub("gnp", "Erdos-Renyi G(n, p)");
    s->add_option("--n", ga.n)->required();
    s->add_option("--p", ga.p)->required()->check(CLI::Range(0.0, 1.0));
    s->add_option("--stream", ga.stream)->default_val(0);
  }

  // rank
  auto* rank = app.add_subcommand("rank", "generic rank of the d-dimensional rigidity matroid");
  std::size_t d = 2;
  bool as_json = false;
  add_common(rank, c);
  rank->add_option("--d", d)->required();
  rank->add_flag("--json", as_json, "print a JSON report instead of the bare rank");

  // pack / kriesell
  auto* pack = app.add_subcommand("pack", "t disjoint minimally d-rigid spanning subgraphs");
  std::size_t t = 2;
  add_common(pack, c);
  pack->add_option("--d", d)->required();
  pack->add_option("--t", t)->default_val(2);
  pack->add_flag("--verify", c.verify, "accepted for symmetry; parts are always re-verified");

  auto* kriesell = app.add_subcommand("kriesell", "spanning tree plus a disjoint d-rigid subgraph");
  add_common(kriesell, c);
  kriesell->add_option("--d", d)->required();
  kriesell->add_flag("--verify", c.verify, "accepted for symmetry; parts are always re-verified");

  // orient
  auto* orient = app.add_subcommand("orient", "k-connected orientation");
  std::size_t k = 1;
  std::string r_ids;
  add_common(orient, c);
  orient->add_option("--k", k)->required();
  orient->add_option("--R", r_ids, "comma-separated R vertex ids");
  orient->add_flag("--verify", c.verify, "check k-connectivity of the result");

  // verify
  auto* verify = app.add_subcommand("verify", "exact k-connectivity test");
  bool digraph = false;
  add_common(verify, c);
  verify->add_option("--k", k)->required();
  verify->add_flag("--digraph", digraph, "input is an arc list");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo checks");
  simulate->require_subcommand(1);
  SimArgs sa;
  std::string sim_kind;
  auto sim_sub = [&](const std::string& name, const std::string& help) {
    auto* s = simulate->add_subcommand(name, help);
    s->add_option("--trials", sa.trials)->default_val(1000);
    s->add_option("--seed", c.seed)->default_val(0);
    s->add_option("--threads", c.threads, "worker threads");
    s->callback([&, name] { sim_kind = name; });
    return s;
  };
  {
    auto* s = sim_sub("ordering", "E min(d, #elements before s) in a random order");
    s->add_option("--setsize", sa.setsize)->default_val(10);
    s->add_option("--d", sa.ordering_d)->default_val(3);
  }
  {
    auto* s = sim_sub("e0", "mean size of the random subgraph E_0");
    s->add_option("-i,--input", c.input, "graph (default K_n with --n)");
    s->add_option("--n", sa.n);
    s->add_option("--d", sa.d)->default_val(2);
    s->add_option("--t", sa.t)->default_val(1);
  }
  {
    auto* s = sim_sub("gpd", "independence of the ordered back-edge subgraph over random orders");
    s->add_option("-i,--input", c.input, "graph (default K_n with --n)");
    s->add_option("--n", sa.n);
    s->add_option("--d", sa.d)->default_val(2);
  }
  {
    auto* s = sim_sub("chernoff", "binomial lower tail against the Chernoff bound");
    s->add_option("--n", sa.n);
    s->add_option("--p", sa.p)->default_val(0.5)->check(CLI::Range(0.0, 1.0));
    s->add_option("--eta", sa.eta)->default_val(0.3);
    s->add_flag("--grid", sa.grid, "run the fixed 18-point grid");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      Sink sink(c.output);
      if (gen_kind == "complete") {
        code = run_gen_graph(sink, c, gen_kind, Graph::complete(ga.n), json::object(),
                             ga.n > 0 ? std::optional<std::size_t>(ga.n - 1) : std::nullopt);
      } else if (gen_kind == "harary") {
        code = run_gen_graph(sink, c, gen_kind, harary_host(ga.k, ga.n), {{"k", ga.k}}, ga.k);
      } else if (gen_kind == "gnp") {
        code = run_gen_graph(sink, c, gen_kind, gnp(ga.n, ga.p, c.seed, ga.stream), {{"p", ga.p}}, std::nullopt);
      } else if (gen_kind == "tdrigid-pack") {
        code = emit_witness(sink, c, gen_kind, tdrigid_packing(ga.n, ga.d, ga.t));
      } else if (gen_kind == "tree-rigid") {
        code = emit_witness(sink, c, gen_kind, tree_rigid_decomposition(ga.n, ga.d));
      } else {
        std::optional<Graph> host;
        if (!ga.host.empty()) host = load_graph(ga.host);
        auto ex = lovasz_yemini(ga.dims, ga.s, host);
        json extra{{"dimensions", ex.dimensions},
                   {"s", ex.s},
                   {"K", ex.connectivity},
                   {"rank_upper_bound", ex.rank_upper_bound},
                   {"packing_requirement", ex.packing_requirement},
                   {"deficiency_strict", ex.deficiency_strict()}};
        code = run_gen_graph(sink, c, gen_kind, ex.graph, extra, ex.connectivity);
      }
    } else if (rank->parsed()) {
      code = cmd_rank(c, d, as_json);
    } else if (pack->parsed()) {
      code = cmd_pack(c, d, t);
    } else if (kriesell->parsed()) {
      code = cmd_kriesell(c, d);
    } else if (orient->parsed()) {
      code = cmd_orient(c, k, r_ids);
    } else if (verify->parsed()) {
      code = cmd_verify(c, k, digraph);
    } else if (simulate->parsed()) {
      if (sim_kind == "ordering") code = cmd_sim_ordering(c, sa);
      else if (sim_kind == "e0") code = cmd_sim_e0(c, sa);
      else if (sim_kind == "gpd") code = cmd_sim_gpd(c, sa);
      else code = cmd_sim_chernoff(c, sa);
    }
  } catch (const ParseError& e) {
    std::cerr << "rigidpack: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // PreconditionError derives from invalid_argument.
    std::cerr << "rigidpack: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rigidpack: " << e.what() << '\n';
    return kFailed;
  }
  std::cout.flush();
  return code;
}
