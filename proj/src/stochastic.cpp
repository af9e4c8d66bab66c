#include "rigidpack/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rigidpack/errors.hpp"
#include "rigidpack/matroid.hpp"
#include "rigidpack/orientation.hpp"
#include "rigidpack/parallel.hpp"
#include "rigidpack/random.hpp"

namespace rigidpack {

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) num = -num, den = -den;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

void check_order_args(std::size_t setsize, std::size_t d) {
  if (d < 1 || setsize < d) throw PreconditionError("min_order_expectation needs setsize >= d >= 1");
}

}  // namespace

Estimate summarize(const std::vector<double>& samples) {
  Estimate e;
  e.trials = samples.size();
  if (samples.empty()) return e;
  const double n = static_cast<double>(samples.size());
  e.mean = pairwise_sum(samples.data(), samples.size()) / n;
  if (samples.size() > 1) {
    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) sq[i] = (samples[i] - e.mean) * (samples[i] - e.mean);
    const double var = pairwise_sum(sq.data(), sq.size()) / (n - 1.0);
    e.standard_error = std::sqrt(var / n);
  }
  return e;
}

Rational min_order_expectation_exact(std::size_t setsize, std::size_t d) {
  check_order_args(setsize, d);
  const auto s = static_cast<long long>(setsize), dd = static_cast<long long>(d);
  return Rational::make(2 * dd * s - dd * (dd + 1), 2 * s);
}

Rational min_order_expectation_brute(std::size_t setsize, std::size_t d) {
  check_order_args(setsize, d);
  if (setsize > 8) throw PreconditionError("brute-force enumeration is limited to setsize <= 8");
  std::vector<std::size_t> perm(setsize);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0, count = 0;
  do {
    // s is element 0; f counts what precedes it.
    const auto f = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), 0) - perm.begin());
    total += static_cast<long long>(std::min(d, f));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational::make(total, count);
}

Estimate min_order_expectation_montecarlo(std::size_t setsize, std::size_t d, std::size_t trials, std::uint64_t seed,
                                          std::size_t threads) {
  check_order_args(setsize, d);
  std::vector<double> samples(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    SeededStream rng(seed, i);
    auto perm = rng.permutation(setsize);
    const auto f = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), 0) - perm.begin());
    samples[i] = static_cast<double>(std::min(d, f));
  });
  return summarize(samples);
}

namespace {

E0Construction build_E0_oriented(const Graph& g, const Digraph& orientation, std::size_t d, std::size_t t,
                                 std::uint64_t seed, std::uint64_t stream,
                                 const std::optional<std::vector<bool>>& forced_u) {
  if (d < 1 || t < 1) throw PreconditionError("build_E0 needs d, t >= 1");
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  SeededStream rng(seed, stream);
  E0Construction c;
  c.dimension = d;
  c.t = t;
  c.orientation = orientation;

  std::vector<bool> in_u(n, false);
  if (forced_u) {
    if (forced_u->size() != n) throw std::invalid_argument("forced U has the wrong size");
    in_u = *forced_u;
  } else {
    for (Vertex v = 0; v < n; ++v) in_u[v] = rng.coin();
  }
  for (Vertex v = 0; v < n; ++v)
    if (in_u[v]) c.u.push_back(v);

  // Out-arcs of each vertex as (edge, head), in edge order.
  std::vector<std::vector<std::pair<EdgeId, Vertex>>> out(n);
  for (EdgeId e = 0; e < m; ++e) {
    Arc a = orientation.arc(e);
    out[a.tail].push_back({e, a.head});
  }

  std::vector<bool> used(m, false);
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t j = 0; j < t; ++j) {
    auto pi = c.u;
    rng.shuffle(pi);
    for (std::size_t i = 0; i < pi.size(); ++i) pos[pi[i]] = i;
    std::vector<EdgeId> fj;
    for (Vertex v : c.u) {
      std::vector<std::pair<std::size_t, EdgeId>> a;  // (position of head, edge)
      for (auto [e, head] : out[v])
        if (in_u[head] && !used[e] && pos[head] < pos[v]) a.push_back({pos[head], e});
      std::sort(a.begin(), a.end());
      const std::size_t take = std::min(d, a.size());
      for (std::size_t i = 0; i < take; ++i) fj.push_back(a[i].second);
      c.audit.push_back({j, v, a.size(), take});
    }
    for (EdgeId e : fj) used[e] = true;
    std::sort(fj.begin(), fj.end());
    c.f.push_back(std::move(fj));
  }

  for (Vertex v = 0; v < n; ++v) {
    if (in_u[v]) continue;
    std::vector<std::pair<Vertex, EdgeId>> into_u;
    for (auto [e, head] : out[v])
      if (in_u[head]) into_u.push_back({head, e});
    std::sort(into_u.begin(), into_u.end());
    const std::size_t take = std::min(t * d, into_u.size());
    for (std::size_t i = 0; i < take; ++i) c.d_edges.push_back(into_u[i].second);
    c.audit.push_back({t, v, into_u.size(), take});
  }
  std::sort(c.d_edges.begin(), c.d_edges.end());

  for (const auto& fj : c.f) c.e0.insert(c.e0.end(), fj.begin(), fj.end());
  c.e0.insert(c.e0.end(), c.d_edges.begin(), c.d_edges.end());
  std::sort(c.e0.begin(), c.e0.end());
  return c;
}

}  // namespace

E0Construction build_E0(const Graph& g, std::size_t d, std::size_t t, std::uint64_t seed, std::uint64_t stream,
                        const std::optional<std::vector<bool>>& forced_u) {
  return build_E0_oriented(g, balanced_orientation(g), d, t, seed, stream, forced_u);
}

bool e0_independent(const Graph& g, const E0Construction& c, std::uint64_t seed) {
  std::vector<std::unique_ptr<RigidityMatroid>> owned;
  std::vector<IndependenceOracle*> oracles;
  for (std::size_t i = 0; i < c.t; ++i) {
    owned.push_back(std::make_unique<RigidityMatroid>(g, c.dimension, seed, i + 1));
    oracles.push_back(owned.back().get());
  }
  return rank_union(oracles, c.e0) == c.e0.size();
}

E0Estimate estimate_E0_mean(const Graph& g, std::size_t d, std::size_t t, std::size_t trials, std::uint64_t seed,
                            std::size_t threads) {
  E0Estimate result;
  result.bound = (static_cast<double>(t * d) - 0.25) * static_cast<double>(g.num_vertices());
  result.hypothesis_met = g.num_vertices() > 0 && g.min_degree() >= t * 10 * d * (d + 1);
  const Digraph orientation = balanced_orientation(g);
  std::vector<double> samples(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    samples[i] = static_cast<double>(build_E0_oriented(g, orientation, d, t, seed, i, std::nullopt).e0.size());
  });
  result.estimate = summarize(samples);
  return result;
}

char to_char(GpiRule rule) {
  switch (rule) {
    case GpiRule::a: return 'a';
    case GpiRule::b: return 'b';
    case GpiRule::c: return 'c';
  }
  return '?';
}

GpiD build_GpiD(const Graph& g, const VertexOrdering& order, std::size_t D) {
  if (D < 2) throw PreconditionError("build_GpiD needs D >= 2");
  const std::size_t n = g.num_vertices();
  if (order.size() != n) throw std::invalid_argument("ordering size does not match the graph");
  GpiD r{order, D, {}, std::vector<GpiRule>(n, GpiRule::a), std::vector<std::optional<std::pair<Vertex, Vertex>>>(n),
         std::vector<std::size_t>(n, 0)};
  for (Vertex v = 0; v < n; ++v) {
    auto back = back_neighbors(g, order, v);
    std::sort(back.begin(), back.end());
    std::vector<Vertex> keep;
    if (back.size() <= D) {
      keep = back;
    } else {
      std::optional<std::pair<Vertex, Vertex>> pair;
      for (std::size_t i = 0; i < back.size() && !pair; ++i)
        for (std::size_t j = i + 1; j < back.size(); ++j)
          if (!g.adjacent(back[i], back[j])) {
            pair = std::pair{back[i], back[j]};
            break;
          }
      if (!pair) {
        r.rule[v] = GpiRule::b;
        keep.assign(back.begin(), back.begin() + static_cast<std::ptrdiff_t>(D));
      } else {
        r.rule[v] = GpiRule::c;
        r.nonadjacent[v] = pair;
        keep = {pair->first, pair->second};
        for (Vertex w : back) {
          if (keep.size() == D + 1) break;
          if (w != pair->first && w != pair->second) keep.push_back(w);
        }
      }
    }
    r.chosen[v] = keep.size();
    for (Vertex w : keep) r.edges.push_back(g.find_edge(v, w));
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

bool check_GpiD_independent(const Graph& g, const VertexOrdering& order, std::size_t d, std::uint64_t seed) {
  auto construction = build_GpiD(g, order, d + 1);
  GraphicOracle graphic(g);
  RigidityMatroid rigid(g, d, seed, 1);
  IndependenceOracle* oracles[] = {&graphic, &rigid};
  return rank_union(oracles, construction.edges) == construction.edges.size();
}

ChernoffCheck chernoff_check(std::size_t n, double p, double eta, std::size_t trials, std::uint64_t seed,
                             std::uint64_t stream) {
  if (!(p > 0.0 && p <= 1.0) || !(eta > 0.0 && eta < 1.0)) throw PreconditionError("need 0 < p <= 1, 0 < eta < 1");
  ChernoffCheck c{n, p, eta, {}, std::exp(-eta * eta * static_cast<double>(n) * p / 2.0)};
  const double threshold = (1.0 - eta) * static_cast<double>(n) * p;
  SeededStream rng(seed, stream);
  std::vector<double> hits(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    std::size_t x = 0;
    for (std::size_t k = 0; k < n; ++k) x += rng.uniform() < p ? 1 : 0;
    hits[i] = static_cast<double>(x) <= threshold ? 1.0 : 0.0;
  }
  c.tail = summarize(hits);
  return c;
}

std::vector<ChernoffCheck> chernoff_grid(std::size_t trials, std::uint64_t seed, std::size_t threads) {
  struct Point {
    std::size_t n;
    double p, eta;
  };
  std::vector<Point> grid;
  for (std::size_t n : {20, 100, 500})
    for (double p : {0.1, 0.5})
      for (double eta : {0.1, 0.3, 0.5}) grid.push_back({n, p, eta});
  std::vector<ChernoffCheck> out(grid.size());
  parallel_for(grid.size(), threads,
               [&](std::size_t i) { out[i] = chernoff_check(grid[i].n, grid[i].p, grid[i].eta, trials, seed, i); });
  return out;
}

}  // namespace rigidpack
