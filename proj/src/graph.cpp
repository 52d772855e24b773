#include "rigidspec/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rigidspec {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("graph: edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} out of range for n=" +
                                  std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("graph: duplicate edge {" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + "}");
  }
  incidence_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    incidence_[edges_[k].u].push_back(k);
    incidence_[edges_[k].v].push_back(k);
  }
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::pair<Graph, TuranPartition> turan_graph(int n, int r) {
  if (r < 2) throw std::invalid_argument("turan_graph: r must be >= 2");
  if (n < r || n % r != 0) {
    throw std::invalid_argument("turan_graph: r=" + std::to_string(r) +
                                " does not divide n=" + std::to_string(n));
  }
  TuranPartition part;
  part.r = r;
  part.part_size = n / r;
  part.parts.resize(static_cast<std::size_t>(r));
  for (int v = 0; v < n; ++v) part.parts[v / part.part_size].push_back(v);

  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part.part_of(u) != part.part_of(v)) edges.emplace_back(u, v);
  return {Graph(n, std::move(edges)), std::move(part)};
}

Graph remove_edge(const Graph& g, const Edge& e) {
  auto idx = g.edge_index(e);
  if (!idx) {
    throw std::invalid_argument("remove_edge: {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "} is not an edge");
  }
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(*idx));
  return Graph(g.num_vertices(), std::move(edges));
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return;
    }
    throw std::invalid_argument(std::string("edge list: missing ") + what);
  };
  next_line("header \"n m\"");
  std::istringstream header(line);
  long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("edge list: malformed header \"" + line + "\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) {
    next_line("edge line");
    std::istringstream row(line);
    long u = -1, v = -1;
    if (!(row >> u >> v)) {
      throw std::invalid_argument("edge list: malformed edge line \"" + line + "\"");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace rigidspec
