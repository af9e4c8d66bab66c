#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidpack/graph.hpp"

namespace rigidpack {

/// Reduced fraction with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

std::string to_string(const Rational& r);

struct Estimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

/// Mean and standard error; the sum is taken over a fixed pairwise tree so
/// the result depends only on the sample order.
Estimate summarize(const std::vector<double>& samples);

/// E min(d, f(pi)) where f counts the elements preceding a fixed s in a
/// uniform ordering of a setsize-element set: d - d(d+1) / (2 setsize).
/// Throws PreconditionError unless setsize >= d >= 1.
Rational min_order_expectation_exact(std::size_t setsize, std::size_t d);
/// Same value by enumerating all orderings; setsize <= 8.
Rational min_order_expectation_brute(std::size_t setsize, std::size_t d);
/// Sample mean over `trials` shuffles, trial i on stream i.
Estimate min_order_expectation_montecarlo(std::size_t setsize, std::size_t d, std::size_t trials,
                                          std::uint64_t seed, std::size_t threads = 1);

/// One line of the E_0 audit log. Round j < t is the F_{j+1} step for a
/// vertex of U; round t is the attachment of a vertex outside U.
struct E0Step {
  std::size_t round = 0;
  Vertex vertex = 0;
  std::size_t available = 0;  // |A_j(v)|, or |N^+(v) cap U|
  std::size_t taken = 0;      // |B_j(v)|, or edges added to U
};

struct E0Construction {
  std::size_t dimension = 0;
  std::size_t t = 0;
  Digraph orientation;                  // out-degree >= floor(deg / 2)
  std::vector<Vertex> u;                // sorted
  std::vector<std::vector<EdgeId>> f;   // F_1..F_t, sorted edge ids
  std::vector<EdgeId> d_edges;          // edges from V - U into U
  std::vector<EdgeId> e0;               // union, sorted
  std::vector<E0Step> audit;
};

/// Random spanning subgraph G_0 built from a balanced orientation, a random
/// half U, t rounds of ordered back-edge selection inside U (B_j(v) = the
/// min(d, |A_j(v)|) members of A_j(v) earliest in pi_j), and for each v
/// outside U the min(td, |N^+(v) cap U|) smallest members of N^+(v) cap U.
/// `forced_u` replaces the random choice of U.
E0Construction build_E0(const Graph& g, std::size_t d, std::size_t t, std::uint64_t seed, std::uint64_t stream = 0,
                        const std::optional<std::vector<bool>>& forced_u = std::nullopt);

/// True if E_0 has rank |E_0| in the union of t copies of R_d.
bool e0_independent(const Graph& g, const E0Construction& c, std::uint64_t seed = 0);

struct E0Estimate {
  Estimate estimate;
  double bound = 0.0;            // (td - 1/4) n
  bool hypothesis_met = false;   // min degree >= t * 10 d (d + 1)
  bool passes() const { return estimate.mean - 3.0 * estimate.standard_error >= bound; }
};

/// Mean |E_0| over trials; trial i uses stream i.
E0Estimate estimate_E0_mean(const Graph& g, std::size_t d, std::size_t t, std::size_t trials, std::uint64_t seed,
                            std::size_t threads = 1);

enum class GpiRule { a, b, c };
char to_char(GpiRule rule);

struct GpiD {
  VertexOrdering order;
  std::size_t D = 0;
  std::vector<EdgeId> edges;  // sorted
  std::vector<GpiRule> rule;  // per vertex
  std::vector<std::optional<std::pair<Vertex, Vertex>>> nonadjacent;  // x, y for rule c
  std::vector<std::size_t> chosen;  // per-vertex number of back edges kept
};

/// Per vertex in order: all back-neighbors if at most D (a); otherwise the D
/// smallest if the back-neighborhood is a clique (b); otherwise the first
/// nonadjacent pair x < y in lexicographic order plus the D - 1 smallest
/// others (c). Throws PreconditionError if D < 2.
GpiD build_GpiD(const Graph& g, const VertexOrdering& order, std::size_t D);

/// True if E^{d+1}_pi has full rank in the union of the graphic matroid and R_d.
bool check_GpiD_independent(const Graph& g, const VertexOrdering& order, std::size_t d, std::uint64_t seed = 0);

struct ChernoffCheck {
  std::size_t n = 0;
  double p = 0.0;
  double eta = 0.0;
  Estimate tail;        // empirical P(X <= (1 - eta) n p)
  double bound = 0.0;   // exp(-eta^2 n p / 2)
  bool passes() const { return tail.mean <= bound + 3.0 * tail.standard_error; }
};

/// Binomial(n, p) lower tail against the Chernoff bound.
ChernoffCheck chernoff_check(std::size_t n, double p, double eta, std::size_t trials, std::uint64_t seed,
                             std::uint64_t stream = 0);

/// chernoff_check over n in {20, 100, 500}, p in {0.1, 0.5}, eta in
/// {0.1, 0.3, 0.5}; grid point i uses stream i.
std::vector<ChernoffCheck> chernoff_grid(std::size_t trials, std::uint64_t seed, std::size_t threads = 1);

}  // namespace rigidpack
