#include <doctest.h>

#include <algorithm>
#include <set>

#include "rigidpack/constructions.hpp"
#include "rigidpack/errors.hpp"
#include "rigidpack/matroid.hpp"
#include "rigidpack/random.hpp"

using namespace rigidpack;

namespace {

bool disjoint(const std::vector<std::vector<EdgeId>>& parts) {
  std::set<EdgeId> seen;
  for (const auto& p : parts)
    for (EdgeId e : p)
      if (!seen.insert(e).second) return false;
  return true;
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({std::min<Vertex>(i, (i + 1) % n), std::max<Vertex>(i, (i + 1) % n)});
  return Graph(n, e);
}

// Graphic oracle whose exchange structure fails a fixed number of times
// before being reseeded back to health.
class FlakyOracle : public IndependenceOracle {
 public:
  FlakyOracle(Graph g, std::size_t fail_at, bool heal) : inner_(std::move(g)), fail_at_(fail_at), heal_(heal) {}
  std::size_t ground_size() const override { return inner_.ground_size(); }
  bool is_independent(std::span<const EdgeId> s) const override { return inner_.is_independent(s); }
  std::string name() const override { return "flaky"; }
  std::unique_ptr<IndependentSetState> make_state(std::span<const EdgeId> s) const override {
    if (!healthy_ && !s.empty() && ++calls_ >= fail_at_) throw OracleInconsistency("flaky rejection");
    return inner_.make_state(s);
  }
  void reseed(std::uint64_t) override {
    ++reseeds;
    if (heal_) healthy_ = true;
  }
  std::size_t reseeds = 0;

 private:
  GraphicOracle inner_;
  std::size_t fail_at_;
  bool heal_;
  bool healthy_ = false;
  mutable std::size_t calls_ = 0;
};

}  // namespace

TEST_SUITE("matroid") {

TEST_CASE("single oracle gives a maximal independent set") {
  Graph g = gnp(12, 0.5, 3);
  GraphicOracle graphic(g);
  IndependenceOracle* one[] = {&graphic};
  auto p = partition(one, g.all_edge_ids());
  CHECK(p.total == RigidityOracle(g, 1, 3, 0).rank_all());
  CHECK(graphic.is_independent(p.parts[0]));
}

TEST_CASE("two spanning trees in K_4") {
  Graph k4 = Graph::complete(4);
  GraphicOracle a(k4), b(k4);
  IndependenceOracle* two[] = {&a, &b};
  auto p = partition(two, k4.all_edge_ids());
  CHECK(p.total == 6);
  CHECK(is_spanning_tree(k4, p.parts[0]));
  CHECK(is_spanning_tree(k4, p.parts[1]));
  CHECK(rank_union(two, k4.all_edge_ids()) == 6);

  // Brute force over all 2-colorings of the edges.
  std::size_t best = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<EdgeId> x, y;
    for (EdgeId e = 0; e < 6; ++e) ((mask >> e) & 1 ? x : y).push_back(e);
    if (exact_independent_d1(k4, x) && exact_independent_d1(k4, y)) best = 6;
  }
  CHECK(best == 6);
}

TEST_CASE("union ranks of complete graphs") {
  Graph k8 = Graph::complete(8);
  RigidityMatroid r1(k8, 2, 0, 1), r2(k8, 2, 0, 2);
  IndependenceOracle* rr[] = {&r1, &r2};
  CHECK(rank_union(rr, k8.all_edge_ids()) == 26);
  GraphicOracle g(k8);
  RigidityMatroid r(k8, 2, 0, 3);
  IndependenceOracle* gr[] = {&g, &r};
  CHECK(rank_union(gr, k8.all_edge_ids()) == 20);
}

TEST_CASE("union rank is bounded by the sum of ranks and monotone") {
  SeededStream rng(8, 0);
  for (int i = 0; i < 10; ++i) {
    Graph g = gnp(10, 0.6, 8, i);
    GraphicOracle a(g);
    RigidityMatroid b(g, 2, 8, i + 1);
    IndependenceOracle* both[] = {&a, &b};
    std::vector<EdgeId> small, large;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rng.coin()) small.push_back(e);
      large.push_back(e);
    }
    const std::size_t rs = rank_union(both, small), rl = rank_union(both, large);
    CHECK(rs <= rl);
    CHECK(rl <= RigidityOracle(g, 1, 8, 0).rank(large) + b.oracle().rank(large));
    auto p = partition(both, large);
    CHECK(disjoint(p.parts));
    CHECK(a.is_independent(p.parts[0]));
    CHECK(b.is_independent(p.parts[1]));
  }
}

TEST_CASE("circuit route matches the rank-query route") {
  for (int i = 0; i < 8; ++i) {
    Graph g = gnp(9, 0.7, 21, i);
    RigidityMatroid a1(g, 2, 21, 1), a2(g, 2, 21, 2);
    GraphicOracle t(g);
    RigidityMatroid b1(g, 2, 21, 1), b2(g, 2, 21, 2);
    GraphicOracle u(g);
    QueryOnlyOracle q1(b1), q2(b2), qt(u);
    IndependenceOracle* fast[] = {&a1, &a2, &t};
    IndependenceOracle* slow[] = {&q1, &q2, &qt};
    auto pf = partition(fast, g.all_edge_ids());
    auto ps = partition(slow, g.all_edge_ids());
    CHECK(pf.total == ps.total);
    CHECK(pf.parts == ps.parts);
  }
}

TEST_CASE("per-step rechecks accept every augmentation") {
  Graph g = Graph::complete(9);
  RigidityMatroid a(g, 2, 5, 1), b(g, 2, 5, 2);
  IndependenceOracle* two[] = {&a, &b};
  PartitionOptions opts;
  opts.recheck_each_step = true;
  auto p = partition(two, g.all_edge_ids(), opts);
  CHECK(p.total == 2 * (2 * 9 - 3));
  CHECK(p.retries == 0);
}

TEST_CASE("inconsistent oracle triggers reseed and retry") {
  Graph k5 = Graph::complete(5);
  FlakyOracle flaky(k5, 3, true);
  GraphicOracle other(k5);
  IndependenceOracle* two[] = {&flaky, &other};
  auto p = partition(two, k5.all_edge_ids());
  CHECK(p.retries >= 1);
  CHECK(flaky.reseeds >= 1);
  CHECK(p.total == 8);
  CHECK(disjoint(p.parts));

  FlakyOracle broken(k5, 1, false);
  IndependenceOracle* bad[] = {&broken, &other};
  PartitionOptions opts;
  opts.max_retries = 3;
  CHECK_THROWS_AS(partition(bad, k5.all_edge_ids(), opts), OracleInconsistency);
}

TEST_CASE("pack_rigid examples") {
  auto k8 = pack_rigid(Graph::complete(8), 2, 2, 1);
  CHECK(k8.success);
  CHECK(k8.verified);
  REQUIRE(k8.parts.size() == 2);
  CHECK(k8.parts[0].size() == 13);
  CHECK(k8.parts[1].size() == 13);
  CHECK(disjoint(k8.parts));

  auto c5 = pack_rigid(cycle(5), 2, 1, 1);
  CHECK_FALSE(c5.success);
  CHECK(c5.total == 5);
  CHECK(c5.required == 7);
  CHECK(c5.deficiency() == 2);

  auto k17 = pack_rigid(Graph::complete(17), 4, 2, 1);
  CHECK(k17.success);
  CHECK(k17.verified);
  CHECK(k17.parts[0].size() == 58);
  CHECK(k17.parts[1].size() == 58);
  CHECK_THROWS_AS(pack_rigid(Graph::complete(3), 3, 1), PreconditionError);
}

TEST_CASE("pack_tree_rigid examples") {
  Graph k6 = Graph::complete(6);
  auto r = pack_tree_rigid(k6, 2, 4);
  CHECK(r.success);
  CHECK(r.verified);
  CHECK(r.parts[0].size() == 5);
  CHECK(r.parts[1].size() == 9);
  CHECK(is_spanning_tree(k6, r.parts[0]));

  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  auto bad = pack_tree_rigid(path, 1, 4);
  CHECK_FALSE(bad.success);

  auto k15 = pack_tree_rigid(Graph::complete(15), 3, 4);
  CHECK(k15.success);
  CHECK(k15.parts[0].size() == 14);
  CHECK(k15.parts[1].size() == 39);
}

TEST_CASE("packing is reproducible") {
  Graph g = gnp(16, 0.8, 9);
  auto a = pack_rigid(g, 2, 2, 77);
  auto b = pack_rigid(g, 2, 2, 77);
  CHECK(a.parts == b.parts);
  CHECK(a.success == b.success);
}

}  // TEST_SUITE
