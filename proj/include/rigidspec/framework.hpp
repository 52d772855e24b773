#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <vector>

#include "rigidspec/graph.hpp"

namespace rigidspec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Map from vertices 0..n-1 to points of R^d, stored as a d x n matrix.
class Placement {
 public:
  Placement() = default;
  /// Throws unless d >= 1, n >= 1 and every point has d coordinates.
  Placement(int d, const std::vector<std::vector<double>>& points);
  explicit Placement(Matrix coords);

  int dim() const { return static_cast<int>(coords_.rows()); }
  int size() const { return static_cast<int>(coords_.cols()); }

  const Matrix& coords() const { return coords_; }
  Matrix& coords() { return coords_; }
  auto point(int i) const { return coords_.col(i); }

  /// Exact coordinate equality.
  bool coincident(int u, int v) const { return coords_.col(u) == coords_.col(v); }
  bool is_injective() const;
  /// Number of distinct points in the image.
  int image_size() const;
  double length(int u, int v) const { return (coords_.col(u) - coords_.col(v)).norm(); }

  /// Coordinates flattened vertex-major: (x_0, y_0, ..., x_1, y_1, ...).
  Vector flattened() const;

 private:
  Matrix coords_;
};

/// Unit vector from p(v) toward p(u); zero when the points coincide.
Vector direction(const Placement& p, int u, int v);

/// dn x |E|; column k is (1_u - 1_v) (x) d_uv for edge k = {u, v}, u < v.
Matrix rigidity_matrix(const Graph& g, const Placement& p);
/// L = R R^t.
Matrix stiffness(const Graph& g, const Placement& p);
/// L^- = R^t R, evaluated as a matrix product.
Matrix lower_stiffness_product(const Graph& g, const Placement& p);
/// L^- from the entry rule: 2 on the diagonal of non-degenerate edges,
/// d_ij . d_ik for edges sharing vertex i, 0 for disjoint edges.
Matrix lower_stiffness_direct(const Graph& g, const Placement& p);

struct FrameworkMatrices {
  Matrix rigidity;
  Matrix stiffness;
  Matrix lower_stiffness;
};

FrameworkMatrices build_framework(const Graph& g, const Placement& p);

/// rank R(G,p) == dn - C(d+1, 2), with `rel_tol` relative to the largest
/// singular value. Throws when n <= d.
bool is_infinitesimally_rigid(const Graph& g, const Placement& p, double rel_tol = 1e-9);

/// d(d+1)/2.
constexpr int trivial_motion_count(int d) { return d * (d + 1) / 2; }

/// Throws std::invalid_argument when p does not place exactly g's vertices.
void check_compatible(const Graph& g, const Placement& p);

// Placement JSON: {"d": int, "points": [[x1, ..., xd], ...]}.
nlohmann::json placement_to_json(const Placement& p);
Placement placement_from_json(const nlohmann::json& j);

/// Row-major dense CSV in full-precision scientific notation.
void write_matrix_csv(std::ostream& out, const Matrix& m);

}  // namespace rigidspec
