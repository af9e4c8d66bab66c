#include <doctest.h>

#include <algorithm>
#include <thread>

#include "rigidpack/constructions.hpp"
#include "rigidpack/matrix.hpp"
#include "rigidpack/random.hpp"
#include "rigidpack/rigidity.hpp"

using namespace rigidpack;

namespace {

std::vector<EdgeId> random_subset(std::size_t m, double keep, SeededStream& rng) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < m; ++e)
    if (rng.uniform() < keep) out.push_back(e);
  return out;
}

Graph wheel(std::size_t rim) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= rim; ++i) {
    edges.push_back({0, i});
    edges.push_back({std::min<Vertex>(i, i % rim + 1), std::max<Vertex>(i, i % rim + 1)});
  }
  return Graph(rim + 1, edges);
}

std::vector<Vertex> distinct_vertices(std::size_t n, std::size_t k, SeededStream& rng, std::vector<Vertex> avoid = {}) {
  auto perm = rng.permutation(n);
  std::vector<Vertex> out;
  for (auto v : perm) {
    if (out.size() == k) break;
    if (std::find(avoid.begin(), avoid.end(), v) == avoid.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("rigidity") {

TEST_CASE("rigidity matrix layout") {
  Graph edge(2, {{0, 1}});
  auto real = Realization::random(2, 1, 7, 0);
  auto m = rigidity_matrix(edge, real);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == real.point(0)[0] - real.point(1)[0]);
  CHECK(m(0, 1) == real.point(1)[0] - real.point(0)[0]);
  CHECK(ff::rank(m) == 1);

  auto r2 = Realization::random(3, 2, 7, 0);
  CHECK(ff::rank(rigidity_matrix(Graph::complete(3), r2)) == 3);
  auto empty = rigidity_matrix(Graph(4, {}), Realization::random(4, 2, 1, 0));
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 8);
  CHECK(ff::rank(empty) == 0);
  CHECK_THROWS(rigidity_matrix(Graph::complete(5), r2));
}

TEST_CASE("rank of complete graphs") {
  CHECK(RigidityOracle(Graph::complete(4), 2).rank_all() == 5);
  CHECK(RigidityOracle(Graph::complete(5), 3).rank_all() == 9);
  CHECK(RigidityOracle(Graph::complete(3), 2).rank_all() == 3);
  for (std::size_t d = 1; d <= 5; ++d)
    for (std::size_t n = 1; n <= 10; ++n) {
      RigidityOracle o(Graph::complete(n), d, 3, n);
      CHECK(o.rank_all() == complete_graph_rank(n, d));
      CHECK(o.rank_reference(o.graph().all_edge_ids()) == o.rank_all());
    }
}

TEST_CASE("independence examples") {
  Graph k4 = Graph::complete(4);
  RigidityOracle o(k4, 2);
  std::vector<EdgeId> minus_one{0, 1, 2, 3, 4};
  CHECK(o.is_independent(minus_one));
  CHECK_FALSE(o.is_independent(k4.all_edge_ids()));
  CHECK(o.is_independent(std::vector<EdgeId>{}));
  CHECK(o.extract_base(k4.all_edge_ids()) == minus_one);
  CHECK(o.extract_base(minus_one) == minus_one);

  RigidityOracle o5(Graph::complete(5), 3);
  auto base = o5.extract_base(o5.graph().all_edge_ids());
  CHECK(base.size() == 9);
  CHECK(o5.is_d_rigid(base));
}

TEST_CASE("rigidity examples") {
  SeededStream rng(12, 0);
  for (int i = 0; i < 30; ++i) {
    Graph g = gnp(8, 0.35, 12, i);
    bool connected = true;
    {
      std::vector<bool> seen(8, false);
      std::vector<Vertex> st{0};
      seen[0] = true;
      while (!st.empty()) {
        Vertex x = st.back();
        st.pop_back();
        for (Vertex y : g.neighbors(x))
          if (!seen[y]) seen[y] = true, st.push_back(y);
      }
      connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
    CHECK(RigidityOracle(g, 1, 5, i).is_d_rigid() == connected);
  }
  CHECK(RigidityOracle(wheel(5), 2).is_d_rigid());
  std::vector<Edge> two;
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) {
      two.push_back({a, b});
      two.push_back({a + 4, b + 4});
    }
  CHECK_FALSE(RigidityOracle(Graph(8, two), 2).is_d_rigid());
}

TEST_CASE("linkedness") {
  Graph k4 = Graph::complete(4);
  RigidityOracle o(k4, 2);
  auto all = k4.all_edge_ids();
  CHECK(o.is_linked(0, 1, all));
  std::vector<EdgeId> no_diag;
  for (EdgeId e : all)
    if (k4.edge(e) != Edge{0, 3}) no_diag.push_back(e);
  CHECK(o.is_linked(0, 3, no_diag));
  RigidityOracle iso(Graph(2, {}), 2);
  CHECK_FALSE(iso.is_linked(0, 1, std::vector<EdgeId>{}));
  CHECK_THROWS_AS(o.is_linked(2, 2, all), std::invalid_argument);
}

TEST_CASE("exact oracles") {
  Graph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(exact_independent_d1(tree, tree.all_edge_ids()));
  CHECK(exact_independent_d2(tree, tree.all_edge_ids()));
  Graph k4 = Graph::complete(4);
  CHECK_FALSE(exact_independent_d2(k4, k4.all_edge_ids()));
  CHECK(exact_independent_d2(k4, std::vector<EdgeId>{0, 1, 2, 3, 4}));
  Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(exact_independent_d2(k33, k33.all_edge_ids()));
  CHECK_FALSE(exact_independent_d1(k33, k33.all_edge_ids()));

  SeededStream rng(31, 0);
  for (int i = 0; i < 200; ++i) {
    Graph g = gnp(2 + rng.below(9), 0.5, 31, i);
    for (int q = 0; q < 5; ++q) {
      auto f = random_subset(g.num_edges(), rng.uniform(), rng);
      CHECK(RigidityOracle(g, 1, 31, i).is_independent(f) == exact_independent_d1(g, f));
      CHECK(RigidityOracle(g, 2, 31, i).is_independent(f) == exact_independent_d2(g, f));
    }
  }
}

TEST_CASE("rank axioms on random samples") {
  SeededStream rng(41, 0);
  for (int i = 0; i < 20; ++i) {
    Graph g = gnp(12, 0.5, 41, i);
    RigidityOracle o(g, 2 + i % 2, 41, i);
    for (int q = 0; q < 10; ++q) {
      auto a = random_subset(g.num_edges(), 0.5, rng);
      auto b = random_subset(g.num_edges(), 0.5, rng);
      std::vector<EdgeId> uni, inter, sup = a;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      CHECK(o.rank(a) <= a.size());
      CHECK(o.rank(inter) <= o.rank(a));
      CHECK(o.rank(a) <= o.rank(uni));
      CHECK(o.rank(uni) + o.rank(inter) <= o.rank(a) + o.rank(b));
      CHECK(o.rank(a) == o.rank_reference(a));
    }
  }
}

TEST_CASE("independent sets are sparse") {
  SeededStream rng(51, 0);
  for (std::size_t d = 2; d <= 3; ++d) {
    for (int i = 0; i < 10; ++i) {
      Graph g = gnp(12, 0.6, 51, 100 * d + i);
      RigidityOracle o(g, d, 51, i);
      auto base = o.extract_base(g.all_edge_ids());
      Graph h = g.subgraph(base);
      for (int q = 0; q < 50; ++q) {
        const std::size_t size = d + rng.below(12 - d + 1);
        auto x = distinct_vertices(12, size, rng);
        CHECK(induced_edge_count(h, x) <= d * size - choose2(d + 1));
      }
    }
  }
}

TEST_CASE("vertex addition and edge splits keep independence") {
  SeededStream rng(61, 0);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int i = 0; i < 10; ++i) {
      Graph g = gnp(10, 0.5, 61, 10 * d + i);
      auto base = RigidityOracle(g, d, 61, i).extract_base(g.all_edge_ids());
      Graph h = g.subgraph(base);
      Graph added = add_vertex(h, distinct_vertices(10, d, rng));
      CHECK(RigidityOracle(added, d, 62, i).is_independent(added.all_edge_ids()));
      if (h.num_edges() > 0 && d >= 1) {
        EdgeId e = rng.below(h.num_edges());
        auto extra = distinct_vertices(10, d - 1, rng, {h.edge(e).u, h.edge(e).v});
        Graph split = edge_split(h, e, extra);
        CHECK(split.num_edges() == h.num_edges() + d);
        CHECK(RigidityOracle(split, d, 63, i).is_independent(split.all_edge_ids()));
      }
    }
  }
}

TEST_CASE("answers depend only on the seed") {
  Graph g = gnp(14, 0.5, 71);
  RigidityOracle a(g, 3, 9, 4), b(g, 3, 9, 4);
  SeededStream rng(71, 0);
  std::vector<std::vector<EdgeId>> sets;
  for (int q = 0; q < 40; ++q) sets.push_back(random_subset(g.num_edges(), rng.uniform(), rng));
  std::vector<std::size_t> seq;
  for (const auto& f : sets) seq.push_back(a.rank(f));
  std::vector<std::size_t> par(sets.size());
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < sets.size(); i += 4) par[i] = b.rank(sets[i]);
    });
  for (auto& t : pool) t.join();
  CHECK(seq == par);
  CHECK(a.row(0) == b.row(0));
  // Cached answers are repeated verbatim.
  for (const auto& f : sets) CHECK(a.rank(f) == b.rank_reference(f));
  CHECK(a.cache_hits() > 0);
}

TEST_CASE("reseed keeps generic answers") {
  Graph k6 = Graph::complete(6);
  RigidityOracle o(k6, 2, 1, 1);
  const auto before = o.realization().coords;
  o.reseed(2);
  CHECK(o.realization().coords != before);
  CHECK(o.rank_all() == 9);
  CHECK(o.fresh(3).rank_all() == 9);
}

}  // TEST_SUITE
