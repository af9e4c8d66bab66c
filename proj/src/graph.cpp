#include "rigidpack/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace rigidpack {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for n=" + std::to_string(n_));
    }
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + ")");
  }

  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n_]);
  incidence_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    adjacency_[fill[e.u]] = e.v;
    incidence_[fill[e.u]++] = id;
    adjacency_[fill[e.v]] = e.u;
    incidence_[fill[e.v]++] = id;
  }
  // Edges are lexicographic, so each vertex sees its lower neighbors in
  // order and then its higher neighbors in order: the lists come out sorted.
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : num_edges() * 2;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const { return find_edge(u, v) != num_edges(); }

EdgeId Graph::find_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it != edges_.end() && *it == Edge{u, v}) return static_cast<EdgeId>(it - edges_.begin());
  return num_edges();
}

std::vector<EdgeId> Graph::all_edge_ids() const {
  std::vector<EdgeId> ids(num_edges());
  for (EdgeId i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

Graph Graph::subgraph(std::span<const EdgeId> ids) const {
  std::vector<Edge> picked;
  picked.reserve(ids.size());
  for (EdgeId id : ids) picked.push_back(edge(id));
  return Graph(n_, std::move(picked));
}

Digraph::Digraph(Graph parent, std::vector<bool> reversed)
    : parent_(std::move(parent)), reversed_(std::move(reversed)) {
  if (reversed_.size() != parent_.num_edges()) {
    throw std::invalid_argument("orientation needs one direction per parent edge");
  }
  in_degree_.assign(parent_.num_vertices(), 0);
  out_degree_.assign(parent_.num_vertices(), 0);
  for (EdgeId e = 0; e < parent_.num_edges(); ++e) {
    auto a = arc(e);
    ++out_degree_[a.tail];
    ++in_degree_[a.head];
  }
}

Digraph Digraph::from_arcs(Graph parent, std::span<const Arc> arcs) {
  if (arcs.size() != parent.num_edges()) {
    throw std::invalid_argument("arc count does not match parent edge count");
  }
  std::vector<bool> reversed(parent.num_edges(), false);
  std::vector<bool> seen(parent.num_edges(), false);
  for (const auto& a : arcs) {
    EdgeId e = parent.find_edge(a.tail, a.head);
    if (e == parent.num_edges()) throw std::invalid_argument("arc not in parent graph");
    if (seen[e]) throw std::invalid_argument("two arcs on one parent edge");
    seen[e] = true;
    reversed[e] = a.tail > a.head;
  }
  return Digraph(std::move(parent), std::move(reversed));
}

Arc Digraph::arc(EdgeId e) const {
  const auto& ed = parent_.edge(e);
  return reversed_[e] ? Arc{ed.v, ed.u} : Arc{ed.u, ed.v};
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs());
  for (EdgeId e = 0; e < num_arcs(); ++e) out.push_back(arc(e));
  return out;
}

std::vector<Vertex> Digraph::out_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : parent_.incident_edges(v)) {
    auto a = arc(e);
    if (a.tail == v) out.push_back(a.head);
  }
  return out;
}

std::vector<Vertex> Digraph::in_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : parent_.incident_edges(v)) {
    auto a = arc(e);
    if (a.head == v) out.push_back(a.tail);
  }
  return out;
}

Digraph Digraph::reversed_copy() const {
  std::vector<bool> flipped(reversed_.size());
  for (std::size_t i = 0; i < flipped.size(); ++i) flipped[i] = !reversed_[i];
  return Digraph(parent_, std::move(flipped));
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
  position_.assign(order_.size(), order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    Vertex v = order_[i];
    if (v >= order_.size() || position_[v] != order_.size()) {
      throw std::invalid_argument("ordering is not a permutation");
    }
    position_[v] = i;
  }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return VertexOrdering(std::move(order));
}

std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> x) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : x) {
    if (v >= g.num_vertices()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (in[e.u] && in[e.v]) ++count;
  return count;
}

std::vector<Vertex> back_neighbors(const Graph& g, const VertexOrdering& order, Vertex v) {
  if (order.size() != g.num_vertices()) throw std::invalid_argument("ordering size mismatch");
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v))
    if (order.precedes(u, v)) out.push_back(u);
  std::sort(out.begin(), out.end(),
            [&](Vertex a, Vertex b) { return order.position(a) < order.position(b); });
  return out;
}

namespace {

// Reads the next non-blank line; returns false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& line, std::size_t lineno) {
  std::istringstream ss(line);
  long long a = -1, b = -1;
  std::string rest;
  if (!(ss >> a >> b) || (ss >> rest)) throw ParseError(lineno, "expected two integers");
  if (a < 0 || b < 0) throw ParseError(lineno, "negative value");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError(0, "missing header");
  auto [n, m] = parse_pair(line, lineno);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges");
    auto [u, v] = parse_pair(line, lineno);
    if (u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (next_line(in, line, lineno)) throw ParseError(lineno, "trailing content");
  return Graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream ss(text);
  return read_graph(ss);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_string(const Graph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

std::vector<Arc> read_arcs(std::istream& in, std::size_t& n) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError(0, "missing header");
  auto [nn, m] = parse_pair(line, lineno);
  n = nn;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "expected " + std::to_string(m) + " arcs");
    auto [u, v] = parse_pair(line, lineno);
    if (u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    if (!seen.insert(Arc{u, v}).second) throw ParseError(lineno, "duplicate arc");
    arcs.push_back({u, v});
  }
  if (next_line(in, line, lineno)) throw ParseError(lineno, "trailing content");
  return arcs;
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.num_vertices() << ' ' << d.num_arcs() << '\n';
  for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

}  // namespace rigidpack
