#include "rigidpack/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rigidpack/errors.hpp"
#include "rigidpack/random.hpp"
#include "rigidpack/rigidity.hpp"

namespace rigidpack {

namespace {

void add_pair(const Graph& host, std::vector<EdgeId>& out, Vertex a, Vertex b) {
  EdgeId e = host.find_edge(a, b);
  if (e == host.num_edges()) throw std::logic_error("construction used a non-edge");
  out.push_back(e);
}

void finish(std::vector<EdgeId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

}  // namespace

PackingWitness tdrigid_packing(std::size_t n, std::size_t d, std::size_t t) {
  if (d == 0 || t == 0) throw PreconditionError("tdrigid_packing needs d, t >= 1");
  if (n < 2 * t * d) throw PreconditionError("tdrigid_packing needs n >= 2td");
  PackingWitness w{Graph::complete(n), d, {}};
  auto block = [d](std::size_t i, std::size_t side) {
    std::vector<Vertex> vs(d);
    for (std::size_t k = 0; k < d; ++k) vs[k] = (2 * i + side) * d + k;
    return vs;
  };
  std::vector<Vertex> rest;
  for (Vertex v = 2 * t * d; v < n; ++v) rest.push_back(v);
  auto join = [&](std::vector<EdgeId>& out, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
      for (Vertex y : b) add_pair(w.host, out, x, y);
  };

  for (std::size_t i = 0; i < t; ++i) {
    LabeledPart part{"G_" + std::to_string(i + 1), "d-rigid", {}};
    auto core = block(i, 0);
    auto side2 = block(i, 1);
    core.insert(core.end(), side2.begin(), side2.end());
    for (std::size_t x = 0; x < core.size(); ++x)
      for (std::size_t y = x + 1; y < core.size(); ++y) add_pair(w.host, part.edges, core[x], core[y]);
    for (std::size_t l = 0; l < t; ++l) {
      if (l < i) {
        join(part.edges, block(i, 0), block(l, 0));
        join(part.edges, block(i, 1), block(l, 1));
      } else if (l > i) {
        join(part.edges, block(i, 0), block(l, 1));
        join(part.edges, block(i, 1), block(l, 0));
      }
    }
    join(part.edges, block(i, 0), rest);
    finish(part.edges);
    w.parts.push_back(std::move(part));
  }
  return w;
}

std::size_t smallest_triangular_cover(std::size_t d) {
  std::size_t a = 0;
  while (choose2(a + 1) < d) ++a;
  return a;
}

std::size_t triangular_cover_formula(std::size_t d) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(d) + 0.25) - 0.5));
}

PackingWitness tree_rigid_decomposition(std::size_t n, std::size_t d) {
  if (d == 0) throw PreconditionError("tree_rigid_decomposition needs d >= 1");
  const std::size_t a = smallest_triangular_cover(d);
  const std::size_t n0 = d + a + 2;
  if (n < n0) throw PreconditionError("tree_rigid_decomposition needs n >= d + a + 2 = " + std::to_string(n0));
  PackingWitness w{Graph::complete(n), d, {}};
  auto u = [](std::size_t i) -> Vertex { return i - 1; };      // u_1..u_{a+1}
  auto v = [a](std::size_t j) -> Vertex { return a + j; };     // v_1..v_{d+1}

  LabeledPart tree{"T", "spanning-tree", {}};
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= a; ++i) {
    const std::size_t ti = (i < a) ? choose2(i + 1) : d;
    for (std::size_t j = prev + 1; j <= ti; ++j) add_pair(w.host, tree.edges, u(i), v(j));
    prev = ti;
  }
  add_pair(w.host, tree.edges, v(d + 1), u(a + 1));
  for (std::size_t i = 1; i <= a; ++i) add_pair(w.host, tree.edges, u(i), u(a + 1));

  std::vector<bool> in_tree(w.host.num_edges(), false);
  for (EdgeId e : tree.edges) in_tree[e] = true;
  LabeledPart rigid{"G_0", "d-rigid", {}};
  for (Vertex x = 0; x < n0; ++x)
    for (Vertex y = x + 1; y < n0; ++y) {
      EdgeId e = w.host.find_edge(x, y);
      if (!in_tree[e]) rigid.edges.push_back(e);
    }
  for (Vertex extra = n0; extra < n; ++extra) {
    add_pair(w.host, tree.edges, 0, extra);
    for (Vertex y = 1; y <= d; ++y) add_pair(w.host, rigid.edges, y, extra);
  }
  finish(tree.edges);
  finish(rigid.edges);
  w.parts.push_back(std::move(tree));
  w.parts.push_back(std::move(rigid));
  return w;
}

Graph harary_host(std::size_t K, std::size_t m) {
  if (K == 0) throw PreconditionError("harary_host needs K >= 1");
  if (m % 2 != 0) throw PreconditionError("harary_host needs an even vertex count");
  if (m < K + 1) throw PreconditionError("harary_host needs m >= K + 1");
  std::set<Edge> edges;
  for (Vertex v = 0; v < m; ++v)
    for (std::size_t o = 1; o <= K / 2; ++o) {
      Vertex w = (v + o) % m;
      edges.insert({std::min(v, w), std::max(v, w)});
    }
  if (K % 2 == 1)
    for (Vertex v = 0; v < m / 2; ++v) edges.insert({v, v + m / 2});
  return Graph(m, {edges.begin(), edges.end()});
}

TightExample tight_example_counts(const std::vector<std::size_t>& dimensions, std::size_t s) {
  if (dimensions.empty()) throw PreconditionError("lovasz_yemini needs at least one dimension");
  if (s == 0) throw PreconditionError("lovasz_yemini needs s >= 1");
  TightExample ex;
  ex.dimensions = dimensions;
  ex.s = s;
  std::size_t sum = 0;
  for (std::size_t d : dimensions) {
    if (d == 0) throw PreconditionError("dimensions must be positive");
    sum += d * (d + 1);
  }
  const std::size_t K = sum - 1;
  ex.connectivity = K;
  const std::size_t n = 2 * s * K;
  ex.rank_upper_bound = s * K;
  for (std::size_t d : dimensions) {
    ex.rank_upper_bound += 2 * s * complete_graph_rank(K, d);
    ex.packing_requirement += complete_graph_rank(n, d);
  }
  return ex;
}

TightExample lovasz_yemini(const std::vector<std::size_t>& dimensions, std::size_t s, std::optional<Graph> host) {
  TightExample ex = tight_example_counts(dimensions, s);
  const std::size_t K = ex.connectivity;
  const std::size_t n = 2 * s * K;

  if (host) {
    if (host->num_vertices() != 2 * s) throw PreconditionError("host must have 2s vertices");
    for (Vertex v = 0; v < host->num_vertices(); ++v)
      if (host->degree(v) != K) throw PreconditionError("host must be K-regular");
    ex.host = std::move(*host);
  } else {
    ex.host = harary_host(K, 2 * s);
  }

  std::vector<Edge> edges;
  for (Vertex h = 0; h < 2 * s; ++h)
    for (Vertex x = 0; x < K; ++x)
      for (Vertex y = x + 1; y < K; ++y) edges.push_back({h * K + x, h * K + y});
  auto slot = [&](Vertex h, Vertex other) {
    auto nb = ex.host.neighbors(h);
    return static_cast<Vertex>(std::lower_bound(nb.begin(), nb.end(), other) - nb.begin());
  };
  for (const auto& e : ex.host.edges()) edges.push_back({e.u * K + slot(e.u, e.v), e.v * K + slot(e.v, e.u)});
  ex.graph = Graph(n, std::move(edges));
  return ex;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed, std::uint64_t stream) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  SeededStream rng(seed, stream);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace rigidpack
