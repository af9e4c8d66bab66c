#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidpack/connectivity.hpp"
#include "rigidpack/errors.hpp"
#include "rigidpack/graph.hpp"
#include "rigidpack/matroid.hpp"

namespace rigidpack {

/// Target in-degree per vertex.
struct DegreeSpec {
  std::vector<std::size_t> in_degree;

  std::size_t total() const;
  std::size_t sum_over(std::span<const Vertex> x) const;
};

/// The set R of C(d+1, 2) vertices receiving in-degree d - 1.
///
/// When n >= C(d+1, 2) the members are distinct. On smaller vertex sets the
/// C(d+1, 2) deficit units cannot sit on distinct vertices; `first` then
/// wraps around so members repeat and a vertex listed c times gets
/// in-degree d - c. This keeps g(V) = dn - C(d+1, 2).
struct RSet {
  std::size_t dimension = 0;
  std::vector<Vertex> members;  // sorted, C(d+1, 2) entries

  /// Lexicographically first C(d+1, 2) vertices (wrapping when n is small).
  static RSet first(std::size_t n, std::size_t d);
  /// Validates size C(d+1, 2), ids < n, and distinctness when n allows it.
  static RSet from(std::vector<Vertex> members, std::size_t n, std::size_t d);

  std::size_t multiplicity(Vertex v) const;
  bool distinct() const;
};

/// g_{d,R}: d off R, d - (multiplicity in R) on R.
DegreeSpec dr_spec(std::size_t n, const RSet& r);

struct OrientationCertificate {
  enum class Kind { feasible, count_mismatch, violating_set };
  Kind kind = Kind::feasible;
  /// For violating_set: nonempty X with i_G(X) > g(X). Sorted.
  std::vector<Vertex> violating;
  std::size_t induced = 0;   // i_G(X), or |E| for count_mismatch
  std::size_t capacity = 0;  // g(X), or g(V) for count_mismatch
};

std::string to_string(OrientationCertificate::Kind kind);

struct HakimiResult {
  OrientationCertificate certificate;
  std::optional<Digraph> orientation;
  bool feasible() const { return orientation.has_value(); }
};

/// Orientation with out-degree >= floor(deg / 2) and |out - in| <= 1 at every
/// vertex: odd-degree vertices are paired through an auxiliary vertex and
/// the result is oriented along Euler circuits.
Digraph balanced_orientation(const Graph& g);

/// Orientation with in-degree exactly spec(v), via a unit-capacity flow
/// source -> edge nodes -> endpoints -> sink (capacity g(v)). On failure the
/// certificate holds a count mismatch or a set X read off the minimum cut:
/// X = vertex nodes reachable from the source in the residual network.
/// Every edge node reachable from the source has both endpoints in X, and
/// the cut value |E| - (reachable edge nodes) + g(X) < |E| gives
/// i_G(X) >= reachable edge nodes > g(X).
HakimiResult hakimi_orientation(const Graph& g, const DegreeSpec& spec);

/// Thrown when a (d,R)-orientation cannot be built.
class OrientationError : public std::runtime_error {
 public:
  OrientationError(const std::string& what, OrientationCertificate cert)
      : std::runtime_error(what), certificate_(std::move(cert)) {}
  const OrientationCertificate& certificate() const { return certificate_; }

 private:
  OrientationCertificate certificate_;
};

/// (d,R)-orientation of a minimally d-rigid graph.
///
/// Throws PreconditionError if |E| != d|V| - C(d+1,2), |V| < d, or (when
/// `oracle_seed` is given) the edge set is not R_d-independent under that
/// realization. Throws OrientationError if the preconditions held and the
/// flow still found a violating set.
Digraph dr_orientation(const Graph& base, const RSet& r, std::optional<std::uint64_t> oracle_seed = std::nullopt);

/// Thrown by the k = 1 path when the graph has a bridge or is disconnected.
class BridgeError : public std::runtime_error {
 public:
  BridgeError(const std::string& what, std::optional<Edge> bridge)
      : std::runtime_error(what), bridge_(bridge) {}
  const std::optional<Edge>& bridge() const { return bridge_; }

 private:
  std::optional<Edge> bridge_;
};

/// Thrown by the k >= 2 path when two disjoint rigid bases do not exist.
class PackingInfeasible : public std::runtime_error {
 public:
  explicit PackingInfeasible(PackingReport report)
      : std::runtime_error("packing infeasible: union rank " + std::to_string(report.total) + " < " +
                           std::to_string(report.required)),
        report_(std::move(report)) {}
  const PackingReport& report() const { return report_; }

 private:
  PackingReport report_;
};

/// Strongly connected orientation by depth-first search: tree edges point
/// away from the root, back edges toward it. Throws BridgeError.
Digraph strong_orientation(const Graph& g);

struct OrientationOptions {
  std::optional<std::vector<Vertex>> r_override;
  std::uint64_t seed = 0;
  bool verify = false;
  std::size_t threads = 1;
};

struct OrientationReport {
  Digraph orientation;
  std::size_t k = 0;
  std::size_t dimension = 0;  // 0 for k = 1
  RSet r;
  std::vector<std::vector<EdgeId>> bases;  // parent edge ids of B_1, B_2
  /// B_1 oriented to in-degrees g_{d,R}; B_2 oriented to out-degrees g_{d,R}.
  std::optional<Digraph> base1;
  std::optional<Digraph> base2;
  bool in_degrees_match = false;   // B_1 in-degrees == g_{d,R}
  bool out_degrees_match = false;  // B_2 out-degrees == g_{d,R}
  std::optional<ConnectivityVerdict> verified;
};

/// k-connected orientation: Robbins for k = 1; for k >= 2 with d = 4k - 4,
/// two disjoint minimally d-rigid bases B_1, B_2, B_1 given a (d,R)-
/// orientation, B_2 a reversed one, remaining edges low id -> high id.
OrientationReport k_connected_orientation(const Graph& g, std::size_t k, const OrientationOptions& options = {});

/// Vertices outside X with an arc into X.
std::vector<Vertex> in_neighbors_of_set(const Digraph& d, std::span<const Vertex> x);

}  // namespace rigidpack
