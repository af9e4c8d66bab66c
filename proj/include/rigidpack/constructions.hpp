#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidpack/graph.hpp"

namespace rigidpack {

struct LabeledPart {
  std::string label;   // e.g. "G_1", "T"
  std::string claim;   // "d-rigid" or "spanning-tree"
  std::vector<EdgeId> edges;  // ids in the host graph, sorted
};

/// Host graph plus labeled edge-disjoint spanning subgraphs.
struct PackingWitness {
  Graph host;
  std::size_t dimension = 0;
  std::vector<LabeledPart> parts;
};

/// t edge-disjoint d-rigid spanning subgraphs of K_n. Vertices 0..2td-1 form
/// the blocks V_1^1, V_1^2, V_2^1, ... (d each); the rest is X. Part i is
/// K(V_i^1 + V_i^2), joined to earlier blocks same-side, to later blocks
/// cross-side, and V_i^1 joined to X. Throws PreconditionError if n < 2td.
PackingWitness tdrigid_packing(std::size_t n, std::size_t d, std::size_t t);

/// Smallest a with C(a+1, 2) >= d.
std::size_t smallest_triangular_cover(std::size_t d);
/// ceil(sqrt(2d + 1/4) - 1/2) in floating point; equals the above.
std::size_t triangular_cover_formula(std::size_t d);

/// Spanning tree T and edge-disjoint d-rigid G_0 in K_n, n >= d + a + 2.
///
/// Labels: u_1..u_{a+1} are 0..a, v_1..v_{d+1} are a+1..a+d+1, further
/// vertices follow. On the first d + a + 2 vertices T is the explicit tree
/// and G_0 its complement; each further vertex w gets the tree edge w-0 and
/// rigid edges to 1..d. parts[0] is T, parts[1] is G_0.
PackingWitness tree_rigid_decomposition(std::size_t n, std::size_t d);

/// Circulant on m vertices with offsets 1..floor(K/2), plus the antipodal
/// matching when K is odd. K-regular and K-connected. Needs m even, m >= K+1.
Graph harary_host(std::size_t K, std::size_t m);

struct TightExample {
  std::vector<std::size_t> dimensions;
  std::size_t s = 0;
  std::size_t connectivity = 0;  // K = sum d_i (d_i + 1) - 1
  Graph host;
  Graph graph;
  /// Upper bound on the union rank: sK + 2s * sum (d_i K - C(d_i+1, 2)).
  std::size_t rank_upper_bound = 0;
  /// sum (d_i |V| - C(d_i+1, 2)), the union rank a packing would need.
  std::size_t packing_requirement = 0;
  bool deficiency_strict() const { return rank_upper_bound < packing_requirement; }
};

/// Bound arithmetic only: dimensions, s, K, both counts. host and graph stay
/// empty. Defined for every s >= 1.
TightExample tight_example_counts(const std::vector<std::size_t>& dimensions, std::size_t s);

/// Vertex-splitting gadget graph: each vertex of a K-regular K-connected
/// host on 2s vertices becomes a K-clique (vertex v -> ids vK..vK+K-1, its
/// j-th host edge in neighbor order attached to copy j). Uses
/// harary_host(K, 2s) unless `host` is given, so 2s >= K + 1 is needed
/// (no simple K-regular graph has fewer vertices).
TightExample lovasz_yemini(const std::vector<std::size_t>& dimensions, std::size_t s,
                           std::optional<Graph> host = std::nullopt);

/// Erdos-Renyi G(n, p) from the given stream.
Graph gnp(std::size_t n, double p, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace rigidpack
