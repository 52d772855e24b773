#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rigidspec/framework.hpp"

namespace rigidspec {

/// d+1 unit vectors in R^d with pairwise inner product -1/d and zero sum.
///
/// Built from the Helmert basis of the sum-zero hyperplane in R^{d+1}: the
/// standard basis vectors are projected onto that hyperplane, expressed in
/// the orthonormal basis h_k = (-1, ..., -1, k, 0, ...) / sqrt(k(k+1)),
/// k = 1..d, and rescaled to unit norm.
Placement regular_simplex(int d);

/// q^triangle: the n/(d+1) vertices of block i all sit on simplex vertex i.
/// Throws unless (d+1) | n.
Placement turan_simplex_placement(int n, int d);

/// q^diamond: block 2i maps to +e_i, block 2i+1 to -e_i (blocks of n/(2d)
/// consecutive vertices). Throws unless 2d | n.
Placement crosspolytope_placement(int n, int d);

struct CirclePlacement {
  Placement placement;
  bool centered = false;   // |sum p| <= 1e-10
  bool injective = false;
};

/// p(i) = (cos theta_i, sin theta_i). Centering is the caller's job.
CirclePlacement unit_circle_placement(std::span<const double> angles);

/// 2 pi k / n, k = 0..n-1.
std::vector<double> roots_of_unity_angles(int n);
/// {theta, theta + pi} for each theta, in that order.
std::vector<double> antipodal_pair_angles(std::span<const double> thetas);

/// Unit equilateral triangle centered on the z-axis at height 0 plus the apex
/// (0, 0, h). Apex edges have length sqrt(h^2 + 1/3). Throws on h < 0.
Placement tetrahedron_h(double h);

/// p^k: vertex j*n + i maps to p(i). Throws on k < 1.
Placement replicate_placement(const Placement& p, int k);

/// n points uniform on S^{d-1}. With `centered`, points come in antipodal
/// pairs (2i, 2i+1) so the sum vanishes exactly; requires even n.
Placement random_sphere_placement(int n, int d, std::uint64_t seed, bool centered,
                                  std::uint64_t stream = 0);

/// Independent standard-normal coordinates.
Placement random_gaussian_placement(int n, int d, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace rigidspec
