// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rigidpack/connectivity.hpp"
#include "rigidpack/constructions.hpp"
#include "rigidpack/matroid.hpp"
#include "rigidpack/orientation.hpp"
#include "rigidpack/random.hpp"
#include "rigidpack/rigidity.hpp"
#include "rigidpack/stochastic.hpp"

using namespace rigidpack;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::size_t threads_from_env() {
  if (const char* s = std::getenv("RIGIDPACK_THREADS")) {
    long v = std::strtol(s, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

const std::size_t kThreads = threads_from_env();

std::size_t union_rank(const Graph& g, std::vector<std::size_t> dims, bool with_graphic, std::uint64_t seed) {
  std::vector<std::unique_ptr<IndependenceOracle>> owned;
  if (with_graphic) owned.push_back(std::make_unique<GraphicOracle>(g));
  for (std::size_t i = 0; i < dims.size(); ++i)
    owned.push_back(std::make_unique<RigidityMatroid>(g, dims[i], seed, i + 1));
  std::vector<IndependenceOracle*> ptrs;
  for (auto& o : owned) ptrs.push_back(o.get());
  return rank_union(ptrs, g.all_edge_ids());
}

Outcome rank_formulas() {
  std::size_t checked = 0;
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t n = 1; n <= 12; ++n) {
      RigidityOracle oracle(Graph::complete(n), d, kSeed, n);
      const std::size_t expected = n <= d + 1 ? n * (n - 1) / 2 : d * n - (d + 1) * d / 2;
      if (oracle.rank_all() != expected)
        return {false, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " rank " +
                           std::to_string(oracle.rank_all()) + " != " + std::to_string(expected)};
      ++checked;
    }
  return {true, std::to_string(checked) + " (d, n) pairs"};
}

Outcome oracle_cross_validation() {
  std::size_t queries = 0, mismatches = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    SeededStream rng(kSeed, 1000 + i);
    const std::size_t n = 2 + rng.below(9);
    Graph g = gnp(n, 0.5, kSeed, i);
    const std::size_t m = g.num_edges();
    for (std::size_t d = 1; d <= 2; ++d) {
      RigidityOracle oracle(g, d, kSeed, 5000 + i);
      std::vector<std::vector<EdgeId>> sets{g.all_edge_ids()};
      for (std::size_t q = 0; q < 10; ++q) {
        std::vector<EdgeId> f;
        const double keep = rng.uniform();
        for (EdgeId e = 0; e < m; ++e)
          if (rng.uniform() < keep) f.push_back(e);
        sets.push_back(std::move(f));
      }
      for (const auto& f : sets) {
        const bool exact = d == 1 ? exact_independent_d1(g, f) : exact_independent_d2(g, f);
        mismatches += oracle.is_independent(f) != exact;
        ++queries;
      }
    }
  }
  return {mismatches == 0, std::to_string(queries) + " queries, " + std::to_string(mismatches) + " mismatches"};
}

Outcome union_rank_formulas() {
  std::ostringstream detail;
  bool ok = true;
  struct Rigid {
    std::size_t d, t, n;
  };
  for (Rigid c : {Rigid{2, 2, 8}, Rigid{2, 3, 12}, Rigid{3, 2, 14}}) {
    const std::size_t expected = c.t * c.d * c.n - c.t * choose2(c.d + 1);
    const std::size_t got = union_rank(Graph::complete(c.n), std::vector<std::size_t>(c.t, c.d), false, kSeed);
    ok = ok && got == expected;
    detail << "r_" << c.d << "^" << c.t << "(K_" << c.n << ")=" << got << "/" << expected << " ";
  }
  struct Mixed {
    std::size_t d, n;
  };
  for (Mixed c : {Mixed{2, 8}, Mixed{3, 15}, Mixed{6, 11}}) {
    const std::size_t expected = (c.d + 1) * c.n - choose2(c.d + 1) - 1;
    const std::size_t got = union_rank(Graph::complete(c.n), {c.d}, true, kSeed);
    ok = ok && got == expected;
    detail << "r_M" << c.d << "(K_" << c.n << ")=" << got << "/" << expected << " ";
  }
  return {ok, detail.str()};
}

bool parts_disjoint(const std::vector<std::vector<EdgeId>>& parts) {
  std::set<EdgeId> seen;
  for (const auto& p : parts)
    for (EdgeId e : p)
      if (!seen.insert(e).second) return false;
  return true;
}

Outcome packing() {
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{17, 4}, {33, 8}}) {
    Graph g = Graph::complete(n);
    auto report = pack_rigid(g, d, 2, kSeed);
    bool good = report.success && parts_disjoint(report.parts);
    for (std::size_t i = 0; good && i < report.parts.size(); ++i) {
      RigidityOracle check(g, d, kSeed + 17, 900 + i);
      good = check.is_d_rigid(report.parts[i]) && report.parts[i].size() == complete_graph_rank(n, d);
    }
    ok = ok && good;
    detail << "K_" << n << " d=" << d << ": " << (good ? "ok" : "failed") << "; ";
  }
  Graph k15 = Graph::complete(15);
  auto tr = pack_tree_rigid(k15, 3, kSeed);
  bool good = tr.success && parts_disjoint(tr.parts) && is_spanning_tree(k15, tr.parts[0]);
  if (good) good = RigidityOracle(k15, 3, kSeed + 17, 950).is_d_rigid(tr.parts[1]);
  ok = ok && good;
  detail << "K_15 tree+3-rigid: " << (good ? "ok" : "failed");
  return {ok, detail.str()};
}

std::optional<OrientationReport> k2_report;

Outcome orientation_pipeline() {
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{17, 2}, {33, 3}}) {
    OrientationOptions opts;
    opts.seed = kSeed;
    opts.verify = true;
    opts.threads = kThreads;
    auto report = k_connected_orientation(Graph::complete(n), k, opts);
    const bool good = report.verified && report.verified->connected && report.in_degrees_match &&
                      report.out_degrees_match;
    ok = ok && good;
    detail << "K_" << n << " k=" << k << ": " << (good ? "ok" : "failed") << "; ";
    if (k == 2) k2_report = std::move(report);
  }
  return {ok, detail.str()};
}

Outcome in_neighbor_sweep() {
  if (!k2_report) {
    OrientationOptions opts;
    opts.seed = kSeed;
    k2_report = k_connected_orientation(Graph::complete(17), 2, opts);
  }
  const auto& rep = *k2_report;
  const Digraph& base = *rep.base1;
  const std::size_t n = base.num_vertices();
  std::vector<bool> in_r(n, false);
  for (Vertex v : rep.r.members) in_r[v] = true;
  const std::size_t half = rep.r.members.size() / 2;
  SeededStream rng(kSeed, 77);
  std::size_t sampled = 0, violations = 0;
  while (sampled < 500) {
    const std::size_t size = 1 + rng.below(n - 1);
    auto perm = rng.permutation(n);
    std::vector<Vertex> x(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(size));
    std::size_t hits = 0;
    for (Vertex v : x) hits += in_r[v];
    if (hits > half) continue;
    std::sort(x.begin(), x.end());
    ++sampled;
    if (in_neighbors_of_set(base, x).size() < rep.k) ++violations;
  }
  return {violations == 0, std::to_string(sampled) + " sets, " + std::to_string(violations) + " violations"};
}

bool brute_orientation_exists(const Graph& g, const DegreeSpec& spec) {
  const std::size_t m = g.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::size_t> in(g.num_vertices(), 0);
    for (EdgeId e = 0; e < m; ++e) ++in[(mask >> e) & 1u ? g.edge(e).u : g.edge(e).v];
    if (in == spec.in_degree) return true;
  }
  return false;
}

Outcome hakimi_certificates() {
  std::size_t feasible = 0, infeasible = 0, bad = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    SeededStream rng(kSeed, 3000 + i);
    const std::size_t n = 2 + rng.below(7);
    Graph g;
    do g = gnp(n, 0.2 + 0.5 * rng.uniform(), kSeed, 4000 + i * 31 + rng.below(1000));
    while (g.num_edges() > 14);
    DegreeSpec spec;
    spec.in_degree.assign(n, 0);
    if (rng.coin()) {
      for (std::size_t e = 0; e < g.num_edges(); ++e) ++spec.in_degree[rng.below(n)];
    } else {
      for (Vertex v = 0; v < n; ++v) spec.in_degree[v] = rng.below(g.degree(v) + 1);
    }
    auto result = hakimi_orientation(g, spec);
    const bool brute = brute_orientation_exists(g, spec);
    if (result.feasible() != brute) ++bad;
    if (result.feasible()) {
      ++feasible;
      for (Vertex v = 0; v < n; ++v)
        if (result.orientation->in_degree(v) != spec.in_degree[v]) ++bad;
    } else {
      ++infeasible;
      const auto& c = result.certificate;
      if (c.kind == OrientationCertificate::Kind::violating_set) {
        if (c.violating.empty() || induced_edge_count(g, c.violating) <= spec.sum_over(c.violating)) ++bad;
      } else if (c.kind != OrientationCertificate::Kind::count_mismatch || spec.total() == g.num_edges()) {
        ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(feasible) + " feasible, " + std::to_string(infeasible) + " infeasible, " +
                        std::to_string(bad) + " disagreements"};
}

Outcome tight_examples() {
  std::ostringstream detail;
  auto a = lovasz_yemini({2}, 4);
  const std::size_t na = a.graph.num_vertices();
  const bool a_conn = is_k_connected(a.graph, 5, kThreads).connected;
  const std::size_t a_rank = RigidityOracle(a.graph, 2, kSeed, 1).rank_all();
  const bool a_ok = na == 40 && a_conn && a_rank < 2 * na - 3;
  detail << "[2],s=4: n=" << na << " 5-conn=" << a_conn << " r_2=" << a_rank << "<" << 2 * na - 3 << "; ";

  auto b = lovasz_yemini({1, 1}, 3);
  const std::size_t nb = b.graph.num_vertices();
  const bool b_conn = is_k_connected(b.graph, 3, kThreads).connected;
  const std::size_t b_rank = union_rank(b.graph, {1, 1}, false, kSeed);
  const bool b_ok = b_conn && b_rank < 2 * (nb - 1);
  detail << "[1,1],s=3: n=" << nb << " 3-conn=" << b_conn << " r_1^2=" << b_rank << "<" << 2 * (nb - 1);
  return {a_ok && b_ok, detail.str()};
}

Outcome stochastic_suite() {
  std::ostringstream detail;
  bool exact_ok = true;
  for (std::size_t s = 1; s <= 8; ++s)
    for (std::size_t d = 1; d <= s; ++d)
      exact_ok = exact_ok && min_order_expectation_exact(s, d) == min_order_expectation_brute(s, d);
  detail << "(i) " << (exact_ok ? "ok" : "failed") << "; ";

  auto mc = min_order_expectation_montecarlo(10, 3, 100000, kSeed, kThreads);
  const bool mc_ok = std::abs(mc.mean - 2.4) <= 3.0 * mc.standard_error;
  detail << "(ii) mean=" << mc.mean << " se=" << mc.standard_error << "; ";

  auto e0 = estimate_E0_mean(Graph::complete(241), 3, 2, 200, kSeed, kThreads);
  const bool e0_ok = e0.hypothesis_met && e0.passes();
  detail << "(iii) mean=" << e0.estimate.mean << " se=" << e0.estimate.standard_error << " bound=" << e0.bound
         << "; ";

  std::size_t indep = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    Graph g = gnp(60, 0.5, kSeed, 7000 + i);
    auto c = build_E0(g, 2, 2, kSeed, i);
    indep += e0_independent(g, c, kSeed + i);
  }
  detail << "(iv) " << indep << "/50 independent";
  return {exact_ok && mc_ok && e0_ok && indep == 50, detail.str()};
}

bool cut_valid(const ArcSet& d, const CutCertificate& cut, std::size_t k) {
  if (cut.separator.size() >= k) return false;
  if (cut.source == cut.target || cut.source >= d.n || cut.target >= d.n) return false;
  return separates(d, cut.separator, cut.source, cut.target) &&
         (cut.directed || separates(d, cut.separator, cut.target, cut.source));
}

Outcome connectivity_vs_brute() {
  std::size_t disagreements = 0, invalid = 0, cuts = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    SeededStream rng(kSeed, 9000 + i);
    const std::size_t n = 2 + rng.below(9);
    const std::size_t k = 1 + rng.below(4);
    const double p = 0.3 + 0.65 * rng.uniform();
    const bool directed = i % 2 == 1;
    ArcSet arcs{n, {}};
    ConnectivityVerdict fast, slow;
    if (directed) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v && rng.uniform() < p) arcs.arcs.push_back({u, v});
      fast = is_k_connected(arcs, k, kThreads);
      slow = brute_force_connectivity(arcs, k);
    } else {
      Graph g = gnp(n, p, kSeed, 9500 + i);
      arcs = ArcSet::symmetric(g);
      fast = is_k_connected(g, k, kThreads);
      slow = brute_force_connectivity(g, k);
    }
    if (fast.connected != slow.connected) ++disagreements;
    for (const auto* v : {&fast, &slow}) {
      if (v->connected) continue;
      if (n < k + 1) continue;
      if (!v->cut || !cut_valid(arcs, *v->cut, k)) ++invalid;
      else ++cuts;
    }
  }
  return {disagreements == 0 && invalid == 0, "500 instances, " + std::to_string(disagreements) +
                                                  " disagreements, " + std::to_string(cuts) + " separators validated, " +
                                                  std::to_string(invalid) + " invalid"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rank of complete graphs", rank_formulas},
      {2, "randomized vs exact independence", oracle_cross_validation},
      {3, "union rank of complete graphs", union_rank_formulas},
      {4, "rigid and tree-rigid packings", packing},
      {5, "k-connected orientations", orientation_pipeline},
      {6, "in-neighbors of vertex sets", in_neighbor_sweep},
      {7, "orientation certificates vs brute force", hakimi_certificates},
      {8, "tight examples", tight_examples},
      {9, "stochastic constructions", stochastic_suite},
      {10, "connectivity vs brute force", connectivity_vs_brute},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s  [%s] (%.2fs)\n", c.id, out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str(),
                secs);
    std::fflush(stdout);
    failures += !out.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
