#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rigidpack/field.hpp"
#include "rigidpack/graph.hpp"
#include "rigidpack/matrix.hpp"

namespace rigidpack {

/// C(n, 2).
constexpr std::size_t choose2(std::size_t n) { return n * (n > 0 ? n - 1 : 0) / 2; }

/// Rank of the d-dimensional generic rigidity matroid of K_n:
/// C(n, 2) for n <= d + 1, dn - C(d + 1, 2) otherwise.
constexpr std::size_t complete_graph_rank(std::size_t n, std::size_t d) {
  return n <= d + 1 ? choose2(n) : d * n - choose2(d + 1);
}

/// Random placement of the vertices in GF(p)^d standing in for a generic
/// realization; rank is exact except with probability <= rows / p.
struct Realization {
  std::size_t dimension = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::vector<ff::Fp> coords;  // vertex-major, dimension entries per vertex

  static Realization random(std::size_t n, std::size_t d, std::uint64_t seed, std::uint64_t stream);

  std::size_t num_vertices() const { return dimension == 0 ? 0 : coords.size() / dimension; }
  std::span<const ff::Fp> point(Vertex v) const { return {coords.data() + v * dimension, dimension}; }
};

/// Writes the rigidity-matrix row of the pair uv into `row` (length d * n).
void rigidity_row(const Realization& real, Vertex u, Vertex v, std::span<ff::Fp> row);

/// One row per edge in edge-id order; u's columns hold p(u) - p(v), v's
/// columns hold p(v) - p(u).
ff::DenseMatrix rigidity_matrix(const Graph& g, const Realization& real);

/// Rank / independence / rigidity / linkedness queries for R_d(G) on a
/// single random realization. Queries are pure given (seed, stream); the
/// rank cache is internally synchronized.
class RigidityOracle {
 public:
  RigidityOracle(Graph g, std::size_t d, std::uint64_t seed = 0, std::uint64_t stream = 0,
                 std::size_t cache_capacity = 4096);
  ~RigidityOracle();
  RigidityOracle(RigidityOracle&&) noexcept;
  RigidityOracle& operator=(RigidityOracle&&) noexcept;

  const Graph& graph() const { return graph_; }
  std::size_t dimension() const { return real_.dimension; }
  const Realization& realization() const { return real_; }

  /// Rank of the rows of F (edge ids; order and duplicates irrelevant).
  std::size_t rank(std::span<const EdgeId> f) const;
  std::size_t rank_all() const;
  /// Same answer as rank(), by full re-elimination of the stacked rows.
  std::size_t rank_reference(std::span<const EdgeId> f) const;

  bool is_independent(std::span<const EdgeId> f) const;
  bool is_d_rigid() const;
  bool is_d_rigid(std::span<const EdgeId> f) const;
  /// True if adding the pair uv to F leaves the rank unchanged.
  /// Throws std::invalid_argument when u == v.
  bool is_linked(Vertex u, Vertex v, std::span<const EdgeId> f) const;

  /// Greedy maximal independent subset of F in increasing edge-id order.
  std::vector<EdgeId> extract_base(std::span<const EdgeId> f) const;

  /// Row for an edge id, length d * n.
  std::vector<ff::Fp> row(EdgeId e) const;
  std::vector<ff::Fp> pair_row(Vertex u, Vertex v) const;

  /// Redraws the realization from a new stream id and clears the cache.
  void reseed(std::uint64_t stream);
  /// Independent oracle on the same graph with a different stream.
  RigidityOracle fresh(std::uint64_t stream) const;

  std::size_t cache_hits() const;

 private:
  struct Cache;
  std::size_t compute_rank(std::span<const EdgeId> sorted) const;

  Graph graph_;
  Realization real_;
  std::size_t cache_capacity_;
  std::unique_ptr<Cache> cache_;
};

/// Exact R_1 independence: F is a forest (union-find).
bool exact_independent_d1(const Graph& g, std::span<const EdgeId> f);
/// Exact R_2 independence by the (2,3)-pebble game.
bool exact_independent_d2(const Graph& g, std::span<const EdgeId> f);

/// Copy of g plus a new vertex n joined to `neighbors`.
Graph add_vertex(const Graph& g, std::span<const Vertex> neighbors);
/// d-dimensional edge split of edge uv with d-1 extra neighbors.
Graph edge_split(const Graph& g, EdgeId e, std::span<const Vertex> extra);

}  // namespace rigidpack
