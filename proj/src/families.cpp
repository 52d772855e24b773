#include "rigidspec/families.hpp"

#include <stdexcept>

#include "rigidspec/canonical.hpp"

namespace rigidspec {

namespace {

Eigen::Index index_of(const Graph& g, int a, int b) {
  auto k = g.edge_index(Edge(a, b));
  if (!k) throw std::logic_error("families: missing edge");
  return static_cast<Eigen::Index>(*k);
}

void fill_block(Vector& out, const Graph& g, const TuranPartition& part, int a, int b,
                double value) {
  for (int x : part.parts[a])
    for (int y : part.parts[b]) out(index_of(g, x, y)) += value;
}

void add_star(Vector& out, const Graph& g, int center, const std::vector<int>& others,
              double value) {
  for (int w : others) out(index_of(g, center, w)) += value;
}

}  // namespace

Vector turan_phi(const Graph& g, const TuranPartition& part, const std::array<int, 4>& idx) {
  const auto [a, b, c, e] = idx;
  Vector out = Vector::Zero(static_cast<Eigen::Index>(g.num_edges()));
  fill_block(out, g, part, a, b, 1.0);
  fill_block(out, g, part, c, e, 1.0);
  fill_block(out, g, part, b, c, -1.0);
  fill_block(out, g, part, a, e, -1.0);
  return out;
}

Vector turan_psi(const Graph& g, const TuranPartition& part, int u, int v, int j, int k) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(g.num_edges()));
  add_star(out, g, u, part.parts[j], 1.0);
  add_star(out, g, v, part.parts[j], -1.0);
  add_star(out, g, v, part.parts[k], 1.0);
  add_star(out, g, u, part.parts[k], -1.0);
  return out;
}

TuranSimplexFamilies turan_simplex_families(int n, int d) {
  if (d < 2 || n < d + 1 || n % (d + 1) != 0) {
    throw std::invalid_argument("turan_simplex_families: need d >= 2 and (d+1) | n");
  }
  auto [g, part] = turan_graph(n, d + 1);
  TuranSimplexFamilies fam;
  fam.graph = std::move(g);
  fam.partition = std::move(part);
  fam.placement = turan_simplex_placement(n, d);
  fam.phi_eigenvalue = static_cast<double>(n) / (d + 1);
  fam.psi_eigenvalue = static_cast<double>(n) / (2.0 * (d + 1));

  if (d >= 3) {
    for (int k = 3; k <= d; ++k) {
      fam.phi_index.push_back({0, 1, 2, k});
      fam.phi_index.push_back({0, 2, 1, k});
    }
    for (int j = 3; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k) fam.phi_index.push_back({1, 2, j, k});
    for (const auto& idx : fam.phi_index) fam.phi.push_back(turan_phi(fam.graph, fam.partition, idx));
  } else {
    fam.note = "Phi family needs four distinct parts (d >= 3)";
  }

  for (int i = 0; i <= d; ++i) {
    const int anchor_part = (i + 1) % (d + 1);
    const auto& vi = fam.partition.parts[i];
    const int ui = vi.front();
    for (std::size_t s = 1; s < vi.size(); ++s) {
      for (int k = 0; k <= d; ++k) {
        if (k == i || k == anchor_part) continue;
        fam.psi_index.push_back({ui, vi[s], anchor_part, k});
        fam.psi.push_back(turan_psi(fam.graph, fam.partition, ui, vi[s], anchor_part, k));
      }
    }
  }
  return fam;
}

Vector cross_phi(const Graph& g, const TuranPartition& part, int i, int j) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(g.num_edges()));
  fill_block(out, g, part, cross_part(i, 1), cross_part(j, 1), 1.0);
  fill_block(out, g, part, cross_part(i, -1), cross_part(j, -1), 1.0);
  fill_block(out, g, part, cross_part(i, -1), cross_part(j, 1), -1.0);
  fill_block(out, g, part, cross_part(i, 1), cross_part(j, -1), -1.0);
  return out;
}

Vector cross_small_psi(const Graph& g, const TuranPartition& part, int i, int j) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(g.num_edges()));
  fill_block(out, g, part, cross_part(i, 1), cross_part(j, 1), 1.0);
  fill_block(out, g, part, cross_part(i, -1), cross_part(j, 1), 1.0);
  fill_block(out, g, part, cross_part(i, 1), cross_part(j, -1), -1.0);
  fill_block(out, g, part, cross_part(i, -1), cross_part(j, -1), -1.0);
  return out;
}

Vector cross_f(const Graph& g, const TuranPartition& part, int u, int v, int j) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(g.num_edges()));
  const auto& plus = part.parts[cross_part(j, 1)];
  const auto& minus = part.parts[cross_part(j, -1)];
  add_star(out, g, u, plus, 1.0);
  add_star(out, g, v, plus, -1.0);
  add_star(out, g, u, minus, -1.0);
  add_star(out, g, v, minus, 1.0);
  return out;
}

CrossFamilies crosspolytope_families(int n, int d) {
  if (d < 2 || n < 2 * d || n % (2 * d) != 0) {
    throw std::invalid_argument("crosspolytope_families: need d >= 2 and 2d | n");
  }
  auto [g, part] = turan_graph(n, 2 * d);
  CrossFamilies fam;
  fam.graph = std::move(g);
  fam.partition = std::move(part);
  fam.placement = crosspolytope_placement(n, d);
  fam.phi_eigenvalue = static_cast<double>(n) / d;
  fam.half_eigenvalue = static_cast<double>(n) / (2.0 * d);

  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      fam.phi_index.push_back({i, j});
      fam.phi.push_back(cross_phi(fam.graph, fam.partition, i, j));
    }

  for (int j = 0; j < d; ++j) {
    const int anchor = (j + 1) % d;
    for (int k = 0; k < d; ++k) {
      if (k == j || k == anchor) continue;
      fam.big_psi_index.push_back({anchor, j, k});
      fam.big_psi.push_back(cross_small_psi(fam.graph, fam.partition, anchor, j) -
                            cross_small_psi(fam.graph, fam.partition, k, j));
    }
  }

  for (int i = 0; i < d; ++i) {
    for (int x : {1, -1}) {
      const auto& block = fam.partition.parts[cross_part(i, x)];
      const int u = block.front();
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        for (std::size_t s = 1; s < block.size(); ++s) {
          fam.f_index.push_back({u, block[s], j});
          fam.f.push_back(cross_f(fam.graph, fam.partition, u, block[s], j));
        }
      }
    }
  }
  return fam;
}

}  // namespace rigidspec
