#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigidpack/graph.hpp"

namespace rigidpack {

/// Vertex separator witnessing that (u, v) cannot be joined by k internally
/// disjoint (directed, if `directed`) paths.
struct CutCertificate {
  bool directed = false;
  std::vector<Vertex> separator;  // sorted
  Vertex source = 0;
  Vertex target = 0;
};

struct PairConnectivity {
  std::size_t value = 0;            // internally disjoint u -> v paths
  std::vector<Vertex> separator;    // minimum u,v-separator, sorted
};

struct ConnectivityVerdict {
  bool connected = false;
  /// Present when a separating pair exists (absent when n <= k).
  std::optional<CutCertificate> cut;
  std::string reason;
};

/// Directed view used by the digraph routines: n vertices and an arc list.
/// Parallel arcs are not allowed; antiparallel pairs are.
struct ArcSet {
  std::size_t n = 0;
  std::vector<Arc> arcs;

  static ArcSet from(const Digraph& d) { return {d.num_vertices(), d.arcs()}; }
  /// Both arcs for every edge.
  static ArcSet symmetric(const Graph& g);
  bool has_arc(Vertex u, Vertex v) const;
};

/// Menger value and a minimum separator for a nonadjacent pair, by unit
/// vertex capacities (split v into v_in -> v_out) and blocking flows.
/// Throws std::invalid_argument for u == v or adjacent u, v.
PairConnectivity vertex_connectivity_pair(const Graph& g, Vertex u, Vertex v);
/// Directed version; throws when the arc u -> v exists.
PairConnectivity vertex_connectivity_pair(const ArcSet& d, Vertex u, Vertex v);

/// Exact k-connectivity test. A graph needs at least k + 1 vertices. Pairs
/// are checked from each of the first k vertices, which suffices: any
/// separator of size < k misses one of them. `threads` fans pair queries
/// out; the verdict does not depend on it.
ConnectivityVerdict is_k_connected(const Graph& g, std::size_t k, std::size_t threads = 1);
ConnectivityVerdict is_k_connected(const ArcSet& d, std::size_t k, std::size_t threads = 1);
ConnectivityVerdict is_k_connected(const Digraph& d, std::size_t k, std::size_t threads = 1);

/// Reference test by enumerating all vertex sets of size < k. n <= 12.
ConnectivityVerdict brute_force_connectivity(const Graph& g, std::size_t k);
ConnectivityVerdict brute_force_connectivity(const ArcSet& d, std::size_t k);

/// True if deleting `separator` leaves no path from source to target.
bool separates(const Graph& g, std::span<const Vertex> separator, Vertex source, Vertex target);
bool separates(const ArcSet& d, std::span<const Vertex> separator, Vertex source, Vertex target);

bool is_connected(const Graph& g);
bool is_strongly_connected(const ArcSet& d);

}  // namespace rigidpack
