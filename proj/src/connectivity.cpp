#include "rigidpack/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "flow.hpp"
#include "rigidpack/parallel.hpp"

namespace rigidpack {

ArcSet ArcSet::symmetric(const Graph& g) {
  ArcSet d{g.num_vertices(), {}};
  d.arcs.reserve(2 * g.num_edges());
  for (const auto& e : g.edges()) {
    d.arcs.push_back({e.u, e.v});
    d.arcs.push_back({e.v, e.u});
  }
  return d;
}

bool ArcSet::has_arc(Vertex u, Vertex v) const {
  return std::find(arcs.begin(), arcs.end(), Arc{u, v}) != arcs.end();
}

namespace {

struct Adjacency {
  std::vector<std::vector<Vertex>> out;
  std::vector<std::set<Vertex>> out_set;

  explicit Adjacency(const ArcSet& d) : out(d.n), out_set(d.n) {
    for (const auto& a : d.arcs) {
      if (a.tail >= d.n || a.head >= d.n) throw std::out_of_range("arc endpoint out of range");
      if (a.tail == a.head) throw std::invalid_argument("loop arc");
      if (!out_set[a.tail].insert(a.head).second) throw std::invalid_argument("parallel arcs");
      out[a.tail].push_back(a.head);
    }
  }
  bool has(Vertex u, Vertex v) const { return out_set[u].count(v) > 0; }
};

PairConnectivity pair_flow(const Adjacency& adj, Vertex u, Vertex v, std::size_t limit) {
  const std::size_t n = adj.out.size();
  const long long big = static_cast<long long>(n) + 1;
  detail::FlowNetwork net(2 * n);
  for (Vertex w = 0; w < n; ++w) net.add_arc(2 * w, 2 * w + 1, (w == u || w == v) ? big : 1);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : adj.out[a]) net.add_arc(2 * a + 1, 2 * b, big);
  PairConnectivity result;
  result.value = static_cast<std::size_t>(net.max_flow(2 * u + 1, 2 * v, static_cast<long long>(limit)));
  if (result.value < limit) {
    auto seen = net.reachable(2 * u + 1);
    for (Vertex w = 0; w < n; ++w)
      if (w != u && w != v && seen[2 * w] && !seen[2 * w + 1]) result.separator.push_back(w);
  }
  return result;
}

bool reaches(const Adjacency& adj, std::span<const Vertex> removed, Vertex s, Vertex t) {
  std::vector<bool> blocked(adj.out.size(), false);
  for (Vertex w : removed) blocked[w] = true;
  if (blocked[s] || blocked[t]) return false;
  std::vector<bool> seen(adj.out.size(), false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    if (x == t) return true;
    for (Vertex y : adj.out[x]) {
      if (blocked[y] || seen[y]) continue;
      seen[y] = true;
      stack.push_back(y);
    }
  }
  return false;
}

// Pair queries for the k-connectivity reduction: from each of the first k
// vertices to every other vertex, in both directions, skipping arcs.
ConnectivityVerdict check_pairs(const ArcSet& d, std::size_t k, bool directed, std::size_t threads) {
  ConnectivityVerdict verdict;
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (d.n < k + 1) {
    verdict.reason = "fewer than k + 1 vertices";
    return verdict;
  }
  Adjacency adj(d);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = 0; j < d.n; ++j) {
      if (i == j) continue;
      for (auto p : {std::pair{i, j}, std::pair{j, i}}) {
        if (!directed && p.first > p.second) continue;
        if (adj.has(p.first, p.second) || !seen.insert(p).second) continue;
        pairs.push_back(p);
      }
    }
  }
  std::vector<PairConnectivity> results(pairs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      results[i] = pair_flow(adj, pairs[i].first, pairs[i].second, k);
      if (results[i].value < k) {
        results.resize(i + 1);
        break;
      }
    }
  } else {
    parallel_for(pairs.size(), threads,
                 [&](std::size_t i) { results[i] = pair_flow(adj, pairs[i].first, pairs[i].second, k); });
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].value < k) {
      verdict.cut = CutCertificate{directed, results[i].separator, pairs[i].first, pairs[i].second};
      verdict.reason = "separator of size " + std::to_string(results[i].separator.size());
      return verdict;
    }
  }
  verdict.connected = true;
  return verdict;
}

ConnectivityVerdict brute(const ArcSet& d, std::size_t k, bool directed) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (d.n > 12) throw std::invalid_argument("brute_force_connectivity is limited to n <= 12");
  ConnectivityVerdict verdict;
  if (d.n < k + 1) {
    verdict.reason = "fewer than k + 1 vertices";
    return verdict;
  }
  Adjacency adj(d);
  for (std::size_t size = 0; size < k; ++size) {
    // Enumerate subsets of the given size in lexicographic bitmask order.
    for (std::uint32_t mask = 0; mask < (1u << d.n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<Vertex> removed;
      for (Vertex w = 0; w < d.n; ++w)
        if (mask & (1u << w)) removed.push_back(w);
      Vertex first = 0;
      while (mask & (1u << first)) ++first;
      for (Vertex w = 0; w < d.n; ++w) {
        if ((mask & (1u << w)) || w == first) continue;
        std::pair<Vertex, Vertex> bad{d.n, d.n};
        if (!reaches(adj, removed, first, w)) bad = {first, w};
        else if (directed && !reaches(adj, removed, w, first)) bad = {w, first};
        if (bad.first != d.n) {
          verdict.cut = CutCertificate{directed, removed, bad.first, bad.second};
          verdict.reason = "separator of size " + std::to_string(size);
          return verdict;
        }
      }
    }
  }
  verdict.connected = true;
  return verdict;
}

}  // namespace

PairConnectivity vertex_connectivity_pair(const ArcSet& d, Vertex u, Vertex v) {
  if (u >= d.n || v >= d.n) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("vertex_connectivity_pair needs u != v");
  Adjacency adj(d);
  if (adj.has(u, v)) throw std::invalid_argument("arc u -> v present: no finite vertex separator");
  return pair_flow(adj, u, v, d.n + 1);
}

PairConnectivity vertex_connectivity_pair(const Graph& g, Vertex u, Vertex v) {
  if (u < g.num_vertices() && v < g.num_vertices() && u != v && g.adjacent(u, v)) {
    throw std::invalid_argument("adjacent pair: no finite vertex separator");
  }
  return vertex_connectivity_pair(ArcSet::symmetric(g), u, v);
}

ConnectivityVerdict is_k_connected(const Graph& g, std::size_t k, std::size_t threads) {
  return check_pairs(ArcSet::symmetric(g), k, false, threads);
}

ConnectivityVerdict is_k_connected(const ArcSet& d, std::size_t k, std::size_t threads) {
  return check_pairs(d, k, true, threads);
}

ConnectivityVerdict is_k_connected(const Digraph& d, std::size_t k, std::size_t threads) {
  return check_pairs(ArcSet::from(d), k, true, threads);
}

ConnectivityVerdict brute_force_connectivity(const Graph& g, std::size_t k) {
  return brute(ArcSet::symmetric(g), k, false);
}

ConnectivityVerdict brute_force_connectivity(const ArcSet& d, std::size_t k) { return brute(d, k, true); }

bool separates(const ArcSet& d, std::span<const Vertex> separator, Vertex source, Vertex target) {
  for (Vertex w : separator)
    if (w == source || w == target) return false;
  Adjacency adj(d);
  return !reaches(adj, separator, source, target);
}

bool separates(const Graph& g, std::span<const Vertex> separator, Vertex source, Vertex target) {
  return separates(ArcSet::symmetric(g), separator, source, target);
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  Adjacency adj(ArcSet::symmetric(g));
  for (Vertex w = 1; w < g.num_vertices(); ++w)
    if (!reaches(adj, {}, 0, w)) return false;
  return true;
}

bool is_strongly_connected(const ArcSet& d) {
  if (d.n <= 1) return true;
  Adjacency adj(d);
  for (Vertex w = 1; w < d.n; ++w)
    if (!reaches(adj, {}, 0, w) || !reaches(adj, {}, w, 0)) return false;
  return true;
}

}  // namespace rigidpack
