#pragma once

#include <array>
#include <string>
#include <vector>

#include "rigidspec/framework.hpp"
#include "rigidspec/graph.hpp"

namespace rigidspec {

// Explicit eigenvectors of L^- for the two Turan frameworks. Parts and
// indices are 0-based; vectors live in the edge order of the Turan graph.

struct TuranSimplexFamilies {
  Graph graph;
  TuranPartition partition;
  Placement placement;

  /// Phi_{i1,i2,i3,i4}, eigenvalue n/(d+1); empty for d < 3.
  std::vector<std::array<int, 4>> phi_index;
  std::vector<Vector> phi;
  double phi_eigenvalue = 0.0;

  /// Psi_{u,v,j,k} stored as (u, v, j, k), eigenvalue n/(2(d+1)).
  std::vector<std::array<int, 4>> psi_index;
  std::vector<Vector> psi;
  double psi_eigenvalue = 0.0;

  std::string note;
};

/// +1 on E(V_a, V_b) and E(V_c, V_e), -1 on E(V_b, V_c) and E(V_a, V_e).
Vector turan_phi(const Graph& g, const TuranPartition& part, const std::array<int, 4>& idx);

/// sum_{w in V_j} (1_{uw} - 1_{vw}) + sum_{w in V_k} (1_{vw} - 1_{uw}), u, v in
/// the same part.
Vector turan_psi(const Graph& g, const TuranPartition& part, int u, int v, int j, int k);

/// Index sets follow the fixed anchors: Phi over {(0,1,2,k), (0,2,1,k)} and
/// {(1,2,j,k), 3 <= j < k}; Psi over anchor u_i = first vertex of V_i and
/// j(i) = (i+1) mod (d+1). Throws unless d >= 2 and (d+1) | n.
TuranSimplexFamilies turan_simplex_families(int n, int d);

struct CrossFamilies {
  Graph graph;
  TuranPartition partition;
  Placement placement;

  /// phi_{ij}, i < j, eigenvalue n/d.
  std::vector<std::array<int, 2>> phi_index;
  std::vector<Vector> phi;
  double phi_eigenvalue = 0.0;

  /// Psi_{ijk} = psi_{ij} - psi_{kj}, eigenvalue n/(2d).
  std::vector<std::array<int, 3>> big_psi_index;
  std::vector<Vector> big_psi;

  /// f_j^{u,v} stored as (u, v, j), eigenvalue n/(2d).
  std::vector<std::array<int, 3>> f_index;
  std::vector<Vector> f;

  double half_eigenvalue = 0.0;
};

/// Part index of V_{i,s} (i in 0..d-1, s = +1 or -1).
constexpr int cross_part(int i, int s) { return 2 * i + (s > 0 ? 0 : 1); }

Vector cross_phi(const Graph& g, const TuranPartition& part, int i, int j);
/// +1 on E(V_{i,+}, V_{j,+}) and E(V_{i,-}, V_{j,+}); -1 on the two V_{j,-} blocks.
Vector cross_small_psi(const Graph& g, const TuranPartition& part, int i, int j);
Vector cross_f(const Graph& g, const TuranPartition& part, int u, int v, int j);

/// Anchors: i(j) = (j+1) mod d and u(i,x) = first vertex of V_{i,x}.
/// Throws unless d >= 2 and 2d | n.
CrossFamilies crosspolytope_families(int n, int d);

}  // namespace rigidspec
