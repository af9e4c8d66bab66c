#include "rigidpack/orientation.hpp"

#include <algorithm>
#include <numeric>

#include "flow.hpp"
#include "rigidpack/rigidity.hpp"

namespace rigidpack {

std::size_t DegreeSpec::total() const { return std::accumulate(in_degree.begin(), in_degree.end(), std::size_t{0}); }

std::size_t DegreeSpec::sum_over(std::span<const Vertex> x) const {
  std::size_t s = 0;
  for (Vertex v : x) s += in_degree.at(v);
  return s;
}

RSet RSet::first(std::size_t n, std::size_t d) {
  if (n == 0) throw PreconditionError("R needs a nonempty vertex set");
  RSet r;
  r.dimension = d;
  const std::size_t size = choose2(d + 1);
  for (std::size_t i = 0; i < size; ++i) r.members.push_back(i % n);
  std::sort(r.members.begin(), r.members.end());
  return r;
}

RSet RSet::from(std::vector<Vertex> members, std::size_t n, std::size_t d) {
  const std::size_t size = choose2(d + 1);
  if (members.size() != size) {
    throw PreconditionError("R must have C(d+1,2) = " + std::to_string(size) + " members");
  }
  for (Vertex v : members)
    if (v >= n) throw PreconditionError("R member " + std::to_string(v) + " out of range");
  std::sort(members.begin(), members.end());
  RSet r{d, std::move(members)};
  if (n >= size && !r.distinct()) throw PreconditionError("R members must be distinct when n >= C(d+1,2)");
  for (Vertex v : r.members)
    if (r.multiplicity(v) > d) throw PreconditionError("R multiplicity exceeds d");
  return r;
}

std::size_t RSet::multiplicity(Vertex v) const {
  auto [lo, hi] = std::equal_range(members.begin(), members.end(), v);
  return static_cast<std::size_t>(hi - lo);
}

bool RSet::distinct() const { return std::adjacent_find(members.begin(), members.end()) == members.end(); }

DegreeSpec dr_spec(std::size_t n, const RSet& r) {
  DegreeSpec spec;
  spec.in_degree.assign(n, r.dimension);
  for (Vertex v : r.members) {
    if (v >= n) throw PreconditionError("R member out of range");
    --spec.in_degree[v];
  }
  return spec;
}

std::string to_string(OrientationCertificate::Kind kind) {
  switch (kind) {
    case OrientationCertificate::Kind::feasible: return "feasible";
    case OrientationCertificate::Kind::count_mismatch: return "count-mismatch";
    case OrientationCertificate::Kind::violating_set: return "violating-set";
  }
  return "unknown";
}

Digraph balanced_orientation(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  // Working multigraph: original edges, then one auxiliary edge per odd vertex.
  std::vector<Edge> work = g.edges();
  const Vertex aux = n;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) % 2 == 1) work.push_back({v, aux});
  std::vector<std::vector<std::size_t>> inc(n + 1);
  for (std::size_t e = 0; e < work.size(); ++e) {
    inc[work[e].u].push_back(e);
    inc[work[e].v].push_back(e);
  }

  // Hierholzer walks: each walk closes where it started, so orienting every
  // edge in its walking direction balances in- and out-degree.
  std::vector<bool> used(work.size(), false);
  std::vector<std::size_t> next(n + 1, 0);
  std::vector<bool> reversed(m, false);
  for (Vertex start = 0; start <= n; ++start) {
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      Vertex x = stack.back();
      auto& i = next[x];
      while (i < inc[x].size() && used[inc[x][i]]) ++i;
      if (i == inc[x].size()) {
        stack.pop_back();
        continue;
      }
      std::size_t e = inc[x][i];
      used[e] = true;
      Vertex y = work[e].u == x ? work[e].v : work[e].u;
      if (e < m) reversed[e] = (x != work[e].u);
      stack.push_back(y);
    }
  }
  return Digraph(g, std::move(reversed));
}

HakimiResult hakimi_orientation(const Graph& g, const DegreeSpec& spec) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (spec.in_degree.size() != n) throw std::invalid_argument("degree spec size does not match the graph");
  HakimiResult result;
  if (spec.total() != m) {
    result.certificate.kind = OrientationCertificate::Kind::count_mismatch;
    result.certificate.induced = m;
    result.certificate.capacity = spec.total();
    return result;
  }
  const std::size_t source = 0, sink = m + n + 1;
  auto edge_node = [](EdgeId e) { return 1 + e; };
  auto vertex_node = [m](Vertex v) { return 1 + m + v; };
  detail::FlowNetwork net(m + n + 2);
  const long long wide = static_cast<long long>(m) + 1;
  std::vector<std::size_t> to_u(m), to_v(m);
  for (EdgeId e = 0; e < m; ++e) {
    net.add_arc(source, edge_node(e), 1);
    to_u[e] = net.add_arc(edge_node(e), vertex_node(g.edge(e).u), wide);
    to_v[e] = net.add_arc(edge_node(e), vertex_node(g.edge(e).v), wide);
  }
  for (Vertex v = 0; v < n; ++v) net.add_arc(vertex_node(v), sink, static_cast<long long>(spec.in_degree[v]));

  const auto flow = net.max_flow(source, sink);
  if (static_cast<std::size_t>(flow) == m) {
    std::vector<bool> reversed(m);
    for (EdgeId e = 0; e < m; ++e) reversed[e] = net.flow(to_u[e]) > 0;  // head u means v -> u
    result.orientation = Digraph(g, std::move(reversed));
    result.certificate.kind = OrientationCertificate::Kind::feasible;
    return result;
  }
  auto seen = net.reachable(source);
  auto& cert = result.certificate;
  cert.kind = OrientationCertificate::Kind::violating_set;
  for (Vertex v = 0; v < n; ++v)
    if (seen[vertex_node(v)]) cert.violating.push_back(v);
  cert.induced = induced_edge_count(g, cert.violating);
  cert.capacity = spec.sum_over(cert.violating);
  return result;
}

Digraph dr_orientation(const Graph& base, const RSet& r, std::optional<std::uint64_t> oracle_seed) {
  const std::size_t n = base.num_vertices();
  const std::size_t d = r.dimension;
  if (d == 0) throw PreconditionError("dimension must be at least 1");
  if (n < d) throw PreconditionError("(d,R)-orientation needs |V| >= d");
  if (base.num_edges() != complete_graph_rank(n, d)) {
    throw PreconditionError("base has " + std::to_string(base.num_edges()) + " edges, minimally " +
                            std::to_string(d) + "-rigid needs " + std::to_string(complete_graph_rank(n, d)));
  }
  if (oracle_seed) {
    RigidityOracle oracle(base, d, *oracle_seed, 0);
    if (!oracle.is_independent(base.all_edge_ids())) throw PreconditionError("base is not R_d-independent");
  }
  auto result = hakimi_orientation(base, dr_spec(n, r));
  if (!result.feasible()) {
    throw OrientationError("no (d,R)-orientation: " + to_string(result.certificate.kind) +
                               " although the base passed the rigidity preconditions",
                           result.certificate);
  }
  return *result.orientation;
}

Digraph strong_orientation(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kNone), low(n, 0), parent_edge(n, kNone), next(n, 0);
  std::vector<bool> reversed(m, false), oriented(m, false);
  std::size_t time = 0;
  std::optional<Edge> bridge;

  auto orient = [&](EdgeId e, Vertex from) {
    reversed[e] = (from != g.edge(e).u);
    oriented[e] = true;
  };

  if (n > 0) {
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = time++;
    while (!stack.empty()) {
      Vertex x = stack.back();
      auto nbrs = g.neighbors(x);
      auto edges = g.incident_edges(x);
      if (next[x] < nbrs.size()) {
        std::size_t i = next[x]++;
        Vertex y = nbrs[i];
        EdgeId e = edges[i];
        if (e == parent_edge[x]) continue;
        if (disc[y] == kNone) {
          orient(e, x);
          parent_edge[y] = e;
          disc[y] = low[y] = time++;
          stack.push_back(y);
        } else if (!oriented[e]) {
          orient(e, x);  // back edge, descendant to ancestor
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }
      stack.pop_back();
      if (!stack.empty()) {
        Vertex p = stack.back();
        low[p] = std::min(low[p], low[x]);
        if (low[x] > disc[p] && !bridge) bridge = g.edge(parent_edge[x]);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] == kNone) throw BridgeError("graph is disconnected", std::nullopt);
  if (bridge) {
    throw BridgeError("bridge " + std::to_string(bridge->u) + "-" + std::to_string(bridge->v) +
                          " prevents a strongly connected orientation",
                      bridge);
  }
  return Digraph(g, std::move(reversed));
}

OrientationReport k_connected_orientation(const Graph& g, std::size_t k, const OrientationOptions& options) {
  if (k == 0) throw PreconditionError("k must be at least 1");
  OrientationReport report;
  report.k = k;
  if (k == 1) {
    report.orientation = strong_orientation(g);
  } else {
    const std::size_t d = 4 * k - 4;
    const std::size_t n = g.num_vertices();
    report.dimension = d;
    report.r = options.r_override ? RSet::from(*options.r_override, n, d) : RSet::first(n, d);
    auto packing = pack_rigid(g, d, 2, options.seed);
    if (!packing.success) throw PackingInfeasible(std::move(packing));
    report.bases = packing.parts;

    const auto spec = dr_spec(n, report.r);
    auto d1 = dr_orientation(g.subgraph(report.bases[0]), report.r);
    auto d2 = dr_orientation(g.subgraph(report.bases[1]), report.r).reversed_copy();

    std::vector<bool> reversed(g.num_edges(), false);  // leftovers: low id -> high id
    for (std::size_t i = 0; i < report.bases[0].size(); ++i) reversed[report.bases[0][i]] = d1.reversed(i);
    for (std::size_t i = 0; i < report.bases[1].size(); ++i) reversed[report.bases[1][i]] = d2.reversed(i);
    report.orientation = Digraph(g, std::move(reversed));

    report.in_degrees_match = report.out_degrees_match = true;
    for (Vertex v = 0; v < n; ++v) {
      report.in_degrees_match = report.in_degrees_match && d1.in_degree(v) == spec.in_degree[v];
      report.out_degrees_match = report.out_degrees_match && d2.out_degree(v) == spec.in_degree[v];
    }
    report.base1 = std::move(d1);
    report.base2 = std::move(d2);
  }
  if (options.verify) report.verified = is_k_connected(report.orientation, k, options.threads);
  return report;
}

std::vector<Vertex> in_neighbors_of_set(const Digraph& d, std::span<const Vertex> x) {
  std::vector<bool> in_x(d.num_vertices(), false);
  for (Vertex v : x) in_x.at(v) = true;
  std::vector<bool> hit(d.num_vertices(), false);
  for (const auto& a : d.arcs())
    if (in_x[a.head] && !in_x[a.tail]) hit[a.tail] = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < d.num_vertices(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

}  // namespace rigidpack
