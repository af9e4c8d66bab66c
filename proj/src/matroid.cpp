#include "rigidpack/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "rigidpack/errors.hpp"

namespace rigidpack {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<EdgeId> sorted_unique(std::span<const EdgeId> s) {
  std::vector<EdgeId> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

class QueryState : public IndependentSetState {
 public:
  QueryState(const IndependenceOracle& oracle, std::vector<EdgeId> set) : oracle_(oracle), set_(std::move(set)) {}

  std::optional<std::vector<EdgeId>> circuit(EdgeId x) const override {
    std::vector<EdgeId> with = set_;
    with.push_back(x);
    if (oracle_.is_independent(with)) return std::nullopt;
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < set_.size(); ++i) {
      std::vector<EdgeId> swapped = with;
      swapped.erase(swapped.begin() + static_cast<std::ptrdiff_t>(i));
      if (oracle_.is_independent(swapped)) out.push_back(set_[i]);
    }
    return out;
  }

 private:
  const IndependenceOracle& oracle_;
  std::vector<EdgeId> set_;
};

class ForestState : public IndependentSetState {
 public:
  ForestState(const Graph& g, std::span<const EdgeId> set) : graph_(g), adjacency_(g.num_vertices()) {
    component_.resize(g.num_vertices());
    std::iota(component_.begin(), component_.end(), 0);
    for (EdgeId e : set) {
      const auto& ed = g.edge(e);
      auto a = find(ed.u), b = find(ed.v);
      if (a == b) throw OracleInconsistency("graphic part contains a cycle");
      component_[a] = b;
      adjacency_[ed.u].push_back({ed.v, e});
      adjacency_[ed.v].push_back({ed.u, e});
    }
    for (std::size_t v = 0; v < component_.size(); ++v) component_[v] = find(v);
  }

  std::optional<std::vector<EdgeId>> circuit(EdgeId x) const override {
    const auto& ed = graph_.edge(x);
    if (component_[ed.u] != component_[ed.v]) return std::nullopt;
    // Tree path from u to v.
    std::vector<std::pair<Vertex, EdgeId>> parent(graph_.num_vertices(), {kNone, kNone});
    std::deque<Vertex> queue{ed.u};
    parent[ed.u] = {ed.u, kNone};
    while (!queue.empty() && parent[ed.v].first == kNone) {
      Vertex a = queue.front();
      queue.pop_front();
      for (auto [b, e] : adjacency_[a]) {
        if (parent[b].first != kNone) continue;
        parent[b] = {a, e};
        queue.push_back(b);
      }
    }
    std::vector<EdgeId> out;
    for (Vertex w = ed.v; w != ed.u; w = parent[w].first) out.push_back(parent[w].second);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t find(std::size_t x) {
    while (component_[x] != x) x = component_[x] = component_[component_[x]];
    return x;
  }

  const Graph& graph_;
  std::vector<std::size_t> component_;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adjacency_;
};

class BasisState : public IndependentSetState {
 public:
  BasisState(const RigidityOracle& oracle, std::span<const EdgeId> set)
      : oracle_(oracle), ids_(set.begin(), set.end()),
        basis_(oracle.dimension() * oracle.graph().num_vertices()) {
    for (EdgeId e : ids_) {
      if (!basis_.insert(oracle_.row(e))) throw OracleInconsistency("rigidity part is dependent");
    }
  }

  std::optional<std::vector<EdgeId>> circuit(EdgeId x) const override {
    auto coef = basis_.express(oracle_.row(x));
    if (!coef) return std::nullopt;
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < coef->size(); ++i)
      if (!(*coef)[i].is_zero()) out.push_back(ids_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const RigidityOracle& oracle_;
  std::vector<EdgeId> ids_;
  ff::IncrementalBasis basis_;
};

}  // namespace

std::unique_ptr<IndependentSetState> IndependenceOracle::make_state(std::span<const EdgeId> set) const {
  std::vector<EdgeId> s(set.begin(), set.end());
  if (!is_independent(s)) throw OracleInconsistency(name() + ": part is dependent");
  return std::make_unique<QueryState>(*this, std::move(s));
}

bool GraphicOracle::is_independent(std::span<const EdgeId> set) const {
  return exact_independent_d1(graph_, set);
}

std::unique_ptr<IndependentSetState> GraphicOracle::make_state(std::span<const EdgeId> set) const {
  return std::make_unique<ForestState>(graph_, set);
}

std::unique_ptr<IndependentSetState> RigidityMatroid::make_state(std::span<const EdgeId> set) const {
  return std::make_unique<BasisState>(oracle_, set);
}

void RigidityMatroid::reseed(std::uint64_t attempt) {
  oracle_.reseed(stream_ + (attempt << 32));
}

MatroidPartition partition(std::span<IndependenceOracle* const> oracles, std::span<const EdgeId> ground,
                           const PartitionOptions& options) {
  if (oracles.empty()) throw std::invalid_argument("partition needs at least one oracle");
  const std::size_t t = oracles.size();
  const std::size_t m = oracles[0]->ground_size();
  for (auto* o : oracles)
    if (o->ground_size() != m) throw std::invalid_argument("oracles disagree on the ground set");
  const auto elements = sorted_unique(ground);
  if (!elements.empty() && elements.back() >= m) throw std::out_of_range("ground element out of range");

  MatroidPartition result;
  result.parts.assign(t, {});
  std::vector<std::size_t> owner(m, kNone);
  std::vector<std::unique_ptr<IndependentSetState>> states(t);
  for (std::size_t i = 0; i < t; ++i) states[i] = oracles[i]->make_state({});

  std::vector<std::vector<EdgeId>> accepted = result.parts;
  std::vector<std::uint64_t> attempts(t, 0);

  // Rebuilds part i's state; on rejection reseeds oracle i and reverts to
  // the last accepted partition, rebuilding until it is accepted again.
  auto rebuild = [&](std::size_t i) -> bool {
    try {
      states[i] = oracles[i]->make_state(result.parts[i]);
      if (options.recheck_each_step && !oracles[i]->is_independent(result.parts[i])) {
        throw OracleInconsistency(oracles[i]->name() + ": recheck rejected part");
      }
      return true;
    } catch (const OracleInconsistency&) {
      for (;;) {
        if (++result.retries > options.max_retries) throw;
        oracles[i]->reseed(++attempts[i]);
        result.parts = accepted;
        std::fill(owner.begin(), owner.end(), kNone);
        for (std::size_t j = 0; j < t; ++j)
          for (EdgeId e : result.parts[j]) owner[e] = j;
        try {
          for (std::size_t j = 0; j < t; ++j) states[j] = oracles[j]->make_state(result.parts[j]);
          return false;
        } catch (const OracleInconsistency&) {
        }
      }
    }
  };

  std::vector<EdgeId> parent(m, kNone);
  std::vector<bool> visited(m, false);
  std::vector<EdgeId> touched;

  for (EdgeId x : elements) {
    bool done = false;
    while (!done) {
      // Breadth-first search for the shortest augmenting path from x.
      for (EdgeId e : touched) {
        visited[e] = false;
        parent[e] = kNone;
      }
      touched.assign(1, x);
      visited[x] = true;
      std::deque<EdgeId> queue{x};
      std::size_t sink_part = kNone;
      EdgeId last = kNone;
      while (!queue.empty() && sink_part == kNone) {
        EdgeId y = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < t && sink_part == kNone; ++i) {
          if (owner[y] == i) continue;
          auto circuit = states[i]->circuit(y);
          if (!circuit) {
            sink_part = i;
            last = y;
            break;
          }
          for (EdgeId z : *circuit) {
            if (visited[z]) continue;
            visited[z] = true;
            parent[z] = y;
            touched.push_back(z);
            queue.push_back(z);
          }
        }
      }
      if (sink_part == kNone) break;  // x is spanned by the current union

      std::vector<EdgeId> path;
      for (EdgeId y = last; y != kNone; y = parent[y]) path.push_back(y);
      std::reverse(path.begin(), path.end());  // x = path[0], ..., last

      std::vector<std::size_t> new_owner(path.size());
      for (std::size_t k = 0; k + 1 < path.size(); ++k) new_owner[k] = owner[path[k + 1]];
      new_owner.back() = sink_part;
      std::vector<bool> changed(t, false);
      for (std::size_t k = 0; k < path.size(); ++k) {
        EdgeId y = path[k];
        if (owner[y] != kNone) {
          auto& from = result.parts[owner[y]];
          from.erase(std::find(from.begin(), from.end(), y));
          changed[owner[y]] = true;
        }
      }
      for (std::size_t k = 0; k < path.size(); ++k) {
        EdgeId y = path[k];
        owner[y] = new_owner[k];
        auto& to = result.parts[new_owner[k]];
        to.insert(std::lower_bound(to.begin(), to.end(), y), y);
        changed[new_owner[k]] = true;
      }

      bool ok = true;
      for (std::size_t i = 0; i < t && ok; ++i)
        if (changed[i]) ok = rebuild(i);
      if (ok) {
        accepted = result.parts;
        ++result.augmentations;
        done = true;
      }
    }
  }

  result.total = 0;
  for (const auto& p : result.parts) result.total += p.size();
  return result;
}

std::size_t rank_union(std::span<IndependenceOracle* const> oracles, std::span<const EdgeId> ground) {
  return partition(oracles, ground).total;
}

bool is_spanning_tree(const Graph& g, std::span<const EdgeId> tree) {
  if (g.num_vertices() == 0) return tree.empty();
  return sorted_unique(tree).size() == tree.size() && tree.size() + 1 == g.num_vertices() &&
         exact_independent_d1(g, tree);
}

namespace {

// Fresh-realization streams used for post-hoc verification.
constexpr std::uint64_t kVerifyStream = 0x5eed0000ULL;

bool pairwise_disjoint(const std::vector<std::vector<EdgeId>>& parts, std::size_t m) {
  std::vector<bool> used(m, false);
  for (const auto& p : parts)
    for (EdgeId e : p) {
      if (used[e]) return false;
      used[e] = true;
    }
  return true;
}

}  // namespace

PackingReport pack_rigid(const Graph& g, std::size_t d, std::size_t t, std::uint64_t seed) {
  if (d == 0 || t == 0) throw PreconditionError("pack_rigid needs d >= 1 and t >= 1");
  if (g.num_vertices() < d + 1) throw PreconditionError("pack_rigid needs n >= d + 1");
  std::vector<std::unique_ptr<RigidityMatroid>> owned;
  std::vector<IndependenceOracle*> oracles;
  for (std::size_t i = 0; i < t; ++i) {
    owned.push_back(std::make_unique<RigidityMatroid>(g, d, seed, i + 1));
    oracles.push_back(owned.back().get());
  }
  auto all = g.all_edge_ids();
  auto part = partition(oracles, all);

  PackingReport report;
  report.dimension = d;
  report.seed = seed;
  report.parts = std::move(part.parts);
  report.total = part.total;
  const std::size_t target = complete_graph_rank(g.num_vertices(), d);
  report.targets.assign(t, target);
  report.required = t * target;
  report.success = report.total == report.required;
  if (report.success) {
    bool ok = pairwise_disjoint(report.parts, g.num_edges());
    for (std::size_t i = 0; i < t && ok; ++i) {
      RigidityOracle check(g, d, seed, kVerifyStream + i);
      ok = report.parts[i].size() == target && check.rank(report.parts[i]) == target;
    }
    report.verified = ok;
  }
  return report;
}

PackingReport pack_tree_rigid(const Graph& g, std::size_t d, std::uint64_t seed) {
  if (d == 0) throw PreconditionError("pack_tree_rigid needs d >= 1");
  if (g.num_vertices() < d + 1) throw PreconditionError("pack_tree_rigid needs n >= d + 1");
  GraphicOracle graphic(g);
  RigidityMatroid rigid(g, d, seed, 1);
  std::vector<IndependenceOracle*> oracles{&graphic, &rigid};
  auto all = g.all_edge_ids();
  auto part = partition(oracles, all);

  PackingReport report;
  report.dimension = d;
  report.seed = seed;
  report.parts = std::move(part.parts);
  report.total = part.total;
  const std::size_t target = complete_graph_rank(g.num_vertices(), d);
  report.targets = {g.num_vertices() - 1, target};
  report.required = report.targets[0] + report.targets[1];
  report.success = report.total == report.required;
  if (report.success) {
    RigidityOracle check(g, d, seed, kVerifyStream);
    report.verified = pairwise_disjoint(report.parts, g.num_edges()) && is_spanning_tree(g, report.parts[0]) &&
                      report.parts[1].size() == target && check.rank(report.parts[1]) == target;
  }
  return report;
}

}  // namespace rigidpack
