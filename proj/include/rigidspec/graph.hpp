#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace rigidspec {

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(int w) const { return u == w || v == w; }
  /// Number of shared endpoints (0, 1 or 2).
  int shared(const Edge& o) const {
    return int(contains(o.u)) + int(contains(o.v));
  }

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically; the position of an edge in that
/// order is its index, and every matrix in the library uses that index as the
/// edge coordinate. Graphs are immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range
  /// endpoints.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }

  std::optional<std::size_t> edge_index(const Edge& e) const;
  bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }

  /// Indices of edges incident to vertex v, ascending.
  const std::vector<std::size_t>& incident(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Balanced partition of 0..n-1 into r contiguous blocks of size n/r.
struct TuranPartition {
  int r = 0;
  int part_size = 0;
  std::vector<std::vector<int>> parts;

  int part_of(int v) const { return v / part_size; }
};

Graph complete_graph(int n);

/// Complete balanced r-partite graph T(n, r). Throws unless r >= 2 and r | n.
std::pair<Graph, TuranPartition> turan_graph(int n, int r);

/// Throws std::invalid_argument if e is not an edge of g.
Graph remove_edge(const Graph& g, const Edge& e);

/// Edge-list text: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace rigidspec
