#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigidpack {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Malformed edge-list input. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored in canonical order (lexicographic, u < v inside each
/// pair) and an edge is identified by its position in that order, so edge
/// subsets everywhere in the library are sorted vectors of EdgeId.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, duplicates or out-of-range ids.
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph complete(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const;
  /// Edge ids incident to v, ordered like neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t min_degree() const;

  bool adjacent(Vertex u, Vertex v) const;
  /// Id of edge uv, or num_edges() when absent.
  EdgeId find_edge(Vertex u, Vertex v) const;

  std::vector<EdgeId> all_edge_ids() const;

  /// Spanning subgraph on the given edge ids. Because ids are canonical, the
  /// i-th edge of the result is the i-th smallest id of `ids`.
  Graph subgraph(std::span<const EdgeId> ids) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> incidence_;
};

/// An orientation of a parent graph: one direction per parent edge.
class Digraph {
 public:
  Digraph() = default;
  /// reversed[e] == false orients edge e = (u, v), u < v, as u -> v.
  Digraph(Graph parent, std::vector<bool> reversed);

  /// Orientation whose arcs are given explicitly; each arc must match a
  /// distinct parent edge.
  static Digraph from_arcs(Graph parent, std::span<const Arc> arcs);

  const Graph& parent() const { return parent_; }
  std::size_t num_vertices() const { return parent_.num_vertices(); }
  std::size_t num_arcs() const { return parent_.num_edges(); }

  Arc arc(EdgeId e) const;
  bool reversed(EdgeId e) const { return reversed_.at(e); }
  std::vector<Arc> arcs() const;

  std::size_t in_degree(Vertex v) const { return in_degree_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_degree_.at(v); }
  std::vector<Vertex> out_neighbors(Vertex v) const;
  std::vector<Vertex> in_neighbors(Vertex v) const;

  /// Same parent, every arc flipped.
  Digraph reversed_copy() const;

 private:
  Graph parent_;
  std::vector<bool> reversed_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::size_t> out_degree_;
};

/// A permutation of 0..n-1; order[i] is the i-th vertex.
class VertexOrdering {
 public:
  explicit VertexOrdering(std::vector<Vertex> order);
  static VertexOrdering identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  Vertex at(std::size_t i) const { return order_.at(i); }
  std::size_t position(Vertex v) const { return position_.at(v); }
  bool precedes(Vertex a, Vertex b) const { return position(a) < position(b); }
  const std::vector<Vertex>& order() const { return order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
};

/// Number of edges of G with both endpoints in X. Duplicates in X are ignored.
std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> x);

/// Neighbors of v that precede v in the ordering, in ordering position order.
std::vector<Vertex> back_neighbors(const Graph& g, const VertexOrdering& order, Vertex v);

// Edge-list text format: header "n m", then m lines "u v".
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string to_string(const Graph& g);

/// Arc list in the same format, "u v" meaning u -> v. No simplicity
/// requirement beyond loop-freeness and no repeated arcs.
std::vector<Arc> read_arcs(std::istream& in, std::size_t& n);
void write_digraph(std::ostream& out, const Digraph& d);

}  // namespace rigidpack
