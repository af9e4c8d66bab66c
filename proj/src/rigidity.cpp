#include "rigidpack/rigidity.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rigidpack/random.hpp"

namespace rigidpack {

using ff::Fp;

Realization Realization::random(std::size_t n, std::size_t d, std::uint64_t seed, std::uint64_t stream) {
  if (d == 0) throw std::invalid_argument("dimension must be at least 1");
  Realization r;
  r.dimension = d;
  r.seed = seed;
  r.stream = stream;
  r.coords.resize(n * d);
  SeededStream rng(seed, stream);
  for (auto& c : r.coords) c = Fp(rng.below(ff::kModulus));
  return r;
}

void rigidity_row(const Realization& real, Vertex u, Vertex v, std::span<Fp> row) {
  const std::size_t d = real.dimension;
  if (row.size() != d * real.num_vertices()) throw std::invalid_argument("row width mismatch");
  if (u >= real.num_vertices() || v >= real.num_vertices()) throw std::out_of_range("vertex out of range");
  std::fill(row.begin(), row.end(), Fp{});
  auto pu = real.point(u);
  auto pv = real.point(v);
  for (std::size_t i = 0; i < d; ++i) {
    Fp diff = pu[i] - pv[i];
    row[u * d + i] = diff;
    row[v * d + i] = -diff;
  }
}

ff::DenseMatrix rigidity_matrix(const Graph& g, const Realization& real) {
  if (real.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("realization does not cover the graph's vertices");
  }
  ff::DenseMatrix m(g.num_edges(), real.dimension * g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) rigidity_row(real, g.edge(e).u, g.edge(e).v, m.row(e));
  return m;
}

// Bounded LRU over sorted edge-id sets. The hash is an order-independent
// digest; equality compares the full set, so collisions cannot corrupt answers.
struct RigidityOracle::Cache {
  struct Hash {
    std::size_t operator()(const std::vector<EdgeId>& key) const {
      std::uint64_t h = 0;
      for (EdgeId e : key) h += SeededStream::splitmix(e);
      return static_cast<std::size_t>(h);
    }
  };
  using Entry = std::pair<std::vector<EdgeId>, std::size_t>;

  std::mutex mutex;
  std::list<Entry> order;
  std::unordered_map<std::vector<EdgeId>, std::list<Entry>::iterator, Hash> index;
  std::size_t hits = 0;

  bool lookup(const std::vector<EdgeId>& key, std::size_t& value) {
    std::lock_guard lock(mutex);
    auto it = index.find(key);
    if (it == index.end()) return false;
    order.splice(order.begin(), order, it->second);
    value = it->second->second;
    ++hits;
    return true;
  }

  void store(std::vector<EdgeId> key, std::size_t value, std::size_t capacity) {
    if (capacity == 0) return;
    std::lock_guard lock(mutex);
    if (index.count(key)) return;
    order.emplace_front(std::move(key), value);
    index.emplace(order.front().first, order.begin());
    while (order.size() > capacity) {
      index.erase(order.back().first);
      order.pop_back();
    }
  }

  void clear() {
    std::lock_guard lock(mutex);
    order.clear();
    index.clear();
  }
};

RigidityOracle::RigidityOracle(Graph g, std::size_t d, std::uint64_t seed, std::uint64_t stream,
                               std::size_t cache_capacity)
    : graph_(std::move(g)),
      real_(Realization::random(graph_.num_vertices(), d, seed, stream)),
      cache_capacity_(cache_capacity),
      cache_(std::make_unique<Cache>()) {}

RigidityOracle::~RigidityOracle() = default;
RigidityOracle::RigidityOracle(RigidityOracle&&) noexcept = default;
RigidityOracle& RigidityOracle::operator=(RigidityOracle&&) noexcept = default;

std::vector<Fp> RigidityOracle::row(EdgeId e) const {
  const auto& ed = graph_.edge(e);
  return pair_row(ed.u, ed.v);
}

std::vector<Fp> RigidityOracle::pair_row(Vertex u, Vertex v) const {
  std::vector<Fp> r(dimension() * graph_.num_vertices());
  rigidity_row(real_, u, v, r);
  return r;
}

namespace {

std::vector<EdgeId> normalized(std::span<const EdgeId> f, std::size_t m) {
  std::vector<EdgeId> s(f.begin(), f.end());
  for (EdgeId e : s)
    if (e >= m) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

std::size_t RigidityOracle::compute_rank(std::span<const EdgeId> sorted) const {
  ff::IncrementalBasis basis(dimension() * graph_.num_vertices());
  const std::size_t cap = dimension() * graph_.num_vertices();
  for (EdgeId e : sorted) {
    basis.insert(row(e));
    if (basis.size() == cap) break;
  }
  return basis.size();
}

std::size_t RigidityOracle::rank(std::span<const EdgeId> f) const {
  auto key = normalized(f, graph_.num_edges());
  std::size_t value = 0;
  if (cache_->lookup(key, value)) return value;
  value = compute_rank(key);
  cache_->store(std::move(key), value, cache_capacity_);
  return value;
}

std::size_t RigidityOracle::rank_all() const {
  auto all = graph_.all_edge_ids();
  return rank(all);
}

std::size_t RigidityOracle::rank_reference(std::span<const EdgeId> f) const {
  auto key = normalized(f, graph_.num_edges());
  ff::DenseMatrix m(key.size(), dimension() * graph_.num_vertices());
  for (std::size_t i = 0; i < key.size(); ++i) {
    rigidity_row(real_, graph_.edge(key[i]).u, graph_.edge(key[i]).v, m.row(i));
  }
  return ff::rank(m);
}

bool RigidityOracle::is_independent(std::span<const EdgeId> f) const {
  auto key = normalized(f, graph_.num_edges());
  return rank(key) == key.size();
}

bool RigidityOracle::is_d_rigid() const {
  return rank_all() == complete_graph_rank(graph_.num_vertices(), dimension());
}

bool RigidityOracle::is_d_rigid(std::span<const EdgeId> f) const {
  return rank(f) == complete_graph_rank(graph_.num_vertices(), dimension());
}

bool RigidityOracle::is_linked(Vertex u, Vertex v, std::span<const EdgeId> f) const {
  if (u == v) throw std::invalid_argument("is_linked needs two distinct vertices");
  auto key = normalized(f, graph_.num_edges());
  ff::IncrementalBasis basis(dimension() * graph_.num_vertices());
  for (EdgeId e : key) basis.insert(row(e));
  return basis.in_span(pair_row(u, v));
}

std::vector<EdgeId> RigidityOracle::extract_base(std::span<const EdgeId> f) const {
  auto key = normalized(f, graph_.num_edges());
  ff::IncrementalBasis basis(dimension() * graph_.num_vertices());
  std::vector<EdgeId> base;
  for (EdgeId e : key)
    if (basis.insert(row(e))) base.push_back(e);
  return base;
}

void RigidityOracle::reseed(std::uint64_t stream) {
  real_ = Realization::random(graph_.num_vertices(), dimension(), real_.seed, stream);
  cache_->clear();
}

RigidityOracle RigidityOracle::fresh(std::uint64_t stream) const {
  return RigidityOracle(graph_, dimension(), real_.seed, stream, cache_capacity_);
}

std::size_t RigidityOracle::cache_hits() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->hits;
}

bool exact_independent_d1(const Graph& g, std::span<const EdgeId> f) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto ids = normalized(f, g.num_edges());
  for (EdgeId e : ids) {
    auto a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

namespace {

// (2,3)-pebble game: every vertex starts with two pebbles; an edge is
// accepted when four pebbles can be gathered on its endpoints.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t n) : pebbles_(n, 2), out_(n) {}

  bool try_add(Vertex u, Vertex v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (!(pebbles_[u] < 2 && gather(u, v)) && !(pebbles_[v] < 2 && gather(v, u))) return false;
    }
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // Moves a free pebble to `target` along a directed path that avoids `pinned`.
  bool gather(Vertex target, Vertex pinned) {
    std::vector<Vertex> parent(pebbles_.size(), kNone);
    std::vector<bool> seen(pebbles_.size(), false);
    seen[target] = seen[pinned] = true;
    std::vector<Vertex> stack{target};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : out_[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        if (pebbles_[y] > 0) {
          --pebbles_[y];
          ++pebbles_[target];
          for (Vertex w = y; w != target; w = parent[w]) reverse(parent[w], w);
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  }

  void reverse(Vertex from, Vertex to) {
    auto& lst = out_[from];
    lst.erase(std::find(lst.begin(), lst.end(), to));
    out_[to].push_back(from);
  }

  static constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
};

}  // namespace

bool exact_independent_d2(const Graph& g, std::span<const EdgeId> f) {
  PebbleGame game(g.num_vertices());
  for (EdgeId e : normalized(f, g.num_edges())) {
    if (!game.try_add(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

Graph add_vertex(const Graph& g, std::span<const Vertex> neighbors) {
  std::vector<Edge> edges = g.edges();
  Vertex fresh = g.num_vertices();
  for (Vertex u : neighbors) edges.push_back({u, fresh});
  return Graph(g.num_vertices() + 1, std::move(edges));
}

Graph edge_split(const Graph& g, EdgeId e, std::span<const Vertex> extra) {
  std::vector<Edge> edges;
  const Edge split = g.edge(e);
  for (EdgeId i = 0; i < g.num_edges(); ++i)
    if (i != e) edges.push_back(g.edge(i));
  Vertex fresh = g.num_vertices();
  edges.push_back({split.u, fresh});
  edges.push_back({split.v, fresh});
  for (Vertex w : extra) edges.push_back({w, fresh});
  return Graph(g.num_vertices() + 1, std::move(edges));
}

}  // namespace rigidpack
