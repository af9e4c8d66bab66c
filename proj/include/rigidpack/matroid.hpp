#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigidpack/graph.hpp"
#include "rigidpack/rigidity.hpp"

namespace rigidpack {

/// Exchange structure for one independent set F of a matroid.
class IndependentSetState {
 public:
  virtual ~IndependentSetState() = default;
  /// nullopt if F + x is independent; otherwise the elements y of F for
  /// which F + x - y is independent (the fundamental circuit of x minus x),
  /// sorted ascending.
  virtual std::optional<std::vector<EdgeId>> circuit(EdgeId x) const = 0;
};

/// Independence oracle on the edge ids of a host graph.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  virtual std::size_t ground_size() const = 0;
  virtual bool is_independent(std::span<const EdgeId> set) const = 0;
  virtual std::string name() const = 0;

  /// Exchange structure for `set`. Throws OracleInconsistency if the set is
  /// not independent. The default answers circuit queries with independence
  /// queries only: F + x, then F + x - y for every y.
  virtual std::unique_ptr<IndependentSetState> make_state(std::span<const EdgeId> set) const;

  /// Redraw internal randomness. Deterministic oracles ignore this.
  virtual void reseed(std::uint64_t /*attempt*/) {}
};

/// Graphic matroid (R_1 combinatorially): independent sets are forests.
class GraphicOracle : public IndependenceOracle {
 public:
  explicit GraphicOracle(Graph g) : graph_(std::move(g)) {}
  std::size_t ground_size() const override { return graph_.num_edges(); }
  bool is_independent(std::span<const EdgeId> set) const override;
  std::string name() const override { return "graphic"; }
  std::unique_ptr<IndependentSetState> make_state(std::span<const EdgeId> set) const override;
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

/// R_d through a RigidityOracle; circuits from the incremental basis.
class RigidityMatroid : public IndependenceOracle {
 public:
  RigidityMatroid(Graph g, std::size_t d, std::uint64_t seed, std::uint64_t stream)
      : oracle_(std::move(g), d, seed, stream), stream_(stream) {}

  std::size_t ground_size() const override { return oracle_.graph().num_edges(); }
  bool is_independent(std::span<const EdgeId> set) const override { return oracle_.is_independent(set); }
  std::string name() const override { return "rigidity-d" + std::to_string(oracle_.dimension()); }
  std::unique_ptr<IndependentSetState> make_state(std::span<const EdgeId> set) const override;
  void reseed(std::uint64_t attempt) override;

  const RigidityOracle& oracle() const { return oracle_; }

 private:
  RigidityOracle oracle_;
  std::uint64_t stream_;
};

/// Forces the generic (rank-query-only) exchange path of another oracle.
/// Used to cross-check the fast circuit routes.
class QueryOnlyOracle : public IndependenceOracle {
 public:
  explicit QueryOnlyOracle(const IndependenceOracle& inner) : inner_(inner) {}
  std::size_t ground_size() const override { return inner_.ground_size(); }
  bool is_independent(std::span<const EdgeId> set) const override { return inner_.is_independent(set); }
  std::string name() const override { return inner_.name() + "/query-only"; }

 private:
  const IndependenceOracle& inner_;
};

struct MatroidPartition {
  std::vector<std::vector<EdgeId>> parts;  // each sorted ascending
  std::size_t total = 0;
  std::size_t augmentations = 0;
  std::size_t retries = 0;
};

struct PartitionOptions {
  /// Re-check every changed part with is_independent after each augmentation.
  bool recheck_each_step = false;
  std::size_t max_retries = 8;
};

/// Maximum-cardinality disjoint family F_1..F_t with F_i independent in
/// oracle i, by shortest augmenting paths in the exchange digraph.
///
/// Uncovered elements are tried in increasing id order. From each, a
/// breadth-first search runs over arcs x -> y (F_i + x dependent,
/// F_i + x - y independent) and x -> sink_i (F_i + x independent); parts and
/// circuit elements are scanned in increasing order, so the result is
/// deterministic. An element with no augmenting path is never retried: the
/// covered set only grows, so it stays spanned.
///
/// If an oracle rejects a part it produced, that oracle is reseeded and the
/// search restarts from the last accepted partition; after max_retries
/// OracleInconsistency propagates.
MatroidPartition partition(std::span<IndependenceOracle* const> oracles, std::span<const EdgeId> ground,
                           const PartitionOptions& options = {});

std::size_t rank_union(std::span<IndependenceOracle* const> oracles, std::span<const EdgeId> ground);

/// Outcome of a packing request.
struct PackingReport {
  std::size_t dimension = 0;
  std::vector<std::vector<EdgeId>> parts;
  std::vector<std::size_t> targets;  // required size per part
  std::size_t total = 0;
  std::size_t required = 0;
  bool success = false;
  /// Set when success: every part re-checked under a fresh realization
  /// (independent, right size, and spanning the right structure).
  bool verified = false;
  std::uint64_t seed = 0;

  std::size_t deficiency() const { return required - total; }
};

/// t edge-disjoint minimally d-rigid spanning subgraphs, or a report of the
/// best partition found. Requires n >= d + 1.
PackingReport pack_rigid(const Graph& g, std::size_t d, std::size_t t, std::uint64_t seed = 0);

/// A spanning tree plus an edge-disjoint minimally d-rigid spanning subgraph.
/// parts[0] is the tree, parts[1] the rigid part. Requires n >= d + 1.
PackingReport pack_tree_rigid(const Graph& g, std::size_t d, std::uint64_t seed = 0);

/// True if `tree` is a spanning tree of g (n - 1 edges, acyclic).
bool is_spanning_tree(const Graph& g, std::span<const EdgeId> tree);

}  // namespace rigidpack
