#include <doctest.h>

#include <algorithm>

#include "rigidpack/connectivity.hpp"
#include "rigidpack/constructions.hpp"
#include "rigidpack/random.hpp"

using namespace rigidpack;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({std::min<Vertex>(i, (i + 1) % n), std::max<Vertex>(i, (i + 1) % n)});
  return Graph(n, e);
}

ArcSet random_digraph(std::size_t n, double p, SeededStream& rng) {
  ArcSet d{n, {}};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.uniform() < p) d.arcs.push_back({u, v});
  return d;
}

}  // namespace

TEST_SUITE("connectivity") {

TEST_CASE("pair connectivity examples") {
  Graph path(3, {{0, 1}, {1, 2}});
  auto p = vertex_connectivity_pair(path, 0, 2);
  CHECK(p.value == 1);
  CHECK(p.separator == std::vector<Vertex>{1});

  std::vector<Edge> k5e;
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b)
      if (!(a == 0 && b == 1)) k5e.push_back({a, b});
  auto q = vertex_connectivity_pair(Graph(5, k5e), 0, 1);
  CHECK(q.value == 3);
  CHECK(q.separator == std::vector<Vertex>{2, 3, 4});

  ArcSet dc{6, {}};
  for (Vertex i = 0; i < 6; ++i) dc.arcs.push_back({i, (i + 1) % 6});
  auto r = vertex_connectivity_pair(dc, 0, 3);
  CHECK(r.value == 1);
  REQUIRE(r.separator.size() == 1);
  CHECK((r.separator[0] == 1 || r.separator[0] == 2));

  CHECK_THROWS_AS(vertex_connectivity_pair(path, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(vertex_connectivity_pair(path, 1, 1), std::invalid_argument);
}

TEST_CASE("k-connectivity examples") {
  for (std::size_t k = 1; k <= 6; ++k) CHECK(is_k_connected(Graph::complete(k + 1), k).connected);
  CHECK_FALSE(is_k_connected(Graph::complete(3), 3).connected);
  CHECK(is_k_connected(cycle(6), 2).connected);
  auto c3 = is_k_connected(cycle(6), 3);
  CHECK_FALSE(c3.connected);
  REQUIRE(c3.cut.has_value());
  CHECK(c3.cut->separator.size() == 2);
  CHECK(separates(cycle(6), c3.cut->separator, c3.cut->source, c3.cut->target));

  CHECK(brute_force_connectivity(Graph::complete(4), 3).connected);
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto b = brute_force_connectivity(bowtie, 2);
  CHECK_FALSE(b.connected);
  REQUIRE(b.cut.has_value());
  CHECK(b.cut->separator == std::vector<Vertex>{2});
  auto f = is_k_connected(bowtie, 2);
  CHECK_FALSE(f.connected);
  CHECK(f.cut->separator == std::vector<Vertex>{2});
  CHECK_THROWS(brute_force_connectivity(Graph::complete(13), 2));
}

TEST_CASE("Menger duality on random pairs") {
  SeededStream rng(23, 0);
  for (int i = 0; i < 100; ++i) {
    Graph g = gnp(10, 0.4, 23, i);
    Vertex u = rng.below(10), v = rng.below(10);
    if (u == v || g.adjacent(u, v)) continue;
    auto pc = vertex_connectivity_pair(g, u, v);
    CHECK(pc.separator.size() == pc.value);
    CHECK(separates(g, pc.separator, u, v));
    // No smaller separator: removing any proper subset leaves a path.
    for (std::size_t drop = 0; drop < pc.separator.size(); ++drop) {
      auto smaller = pc.separator;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK_FALSE(separates(g, smaller, u, v));
    }
  }
}

TEST_CASE("graph and symmetric digraph agree") {
  SeededStream rng(29, 0);
  for (int i = 0; i < 60; ++i) {
    Graph g = gnp(2 + rng.below(9), 0.3 + 0.6 * rng.uniform(), 29, i);
    const std::size_t k = 1 + rng.below(4);
    CHECK(is_k_connected(g, k).connected == is_k_connected(ArcSet::symmetric(g), k).connected);
  }
}

TEST_CASE("agreement with brute force") {
  SeededStream rng(31, 0);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + rng.below(9), k = 1 + rng.below(4);
    if (i % 2 == 0) {
      Graph g = gnp(n, 0.3 + 0.6 * rng.uniform(), 31, i);
      auto fast = is_k_connected(g, k);
      CHECK(fast.connected == brute_force_connectivity(g, k).connected);
      if (fast.cut) {
        CHECK(fast.cut->separator.size() < k);
        CHECK(separates(g, fast.cut->separator, fast.cut->source, fast.cut->target));
      }
    } else {
      ArcSet d = random_digraph(n, 0.4 + 0.5 * rng.uniform(), rng);
      auto fast = is_k_connected(d, k);
      CHECK(fast.connected == brute_force_connectivity(d, k).connected);
      if (fast.cut) {
        CHECK(fast.cut->separator.size() < k);
        CHECK(separates(d, fast.cut->separator, fast.cut->source, fast.cut->target));
      }
    }
  }
}

TEST_CASE("thread count does not change verdicts") {
  SeededStream rng(37, 0);
  for (int i = 0; i < 20; ++i) {
    ArcSet d = random_digraph(12, 0.7, rng);
    for (std::size_t k = 1; k <= 4; ++k) {
      auto a = is_k_connected(d, k, 1), b = is_k_connected(d, k, 4);
      CHECK(a.connected == b.connected);
      CHECK(a.cut.has_value() == b.cut.has_value());
      if (a.cut && b.cut) {
        CHECK(a.cut->separator == b.cut->separator);
        CHECK(a.cut->source == b.cut->source);
        CHECK(a.cut->target == b.cut->target);
      }
    }
  }
}

TEST_CASE("connectedness helpers") {
  CHECK(is_connected(Graph::complete(5)));
  CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
  ArcSet line{3, {{0, 1}, {1, 2}}};
  CHECK_FALSE(is_strongly_connected(line));
  line.arcs.push_back({2, 0});
  CHECK(is_strongly_connected(line));
  CHECK(line.has_arc(2, 0));
}

}  // TEST_SUITE
