#include "rigidspec/canonical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rigidspec/random.hpp"

namespace rigidspec {

Placement regular_simplex(int d) {
  if (d < 1) throw std::invalid_argument("regular_simplex: d must be >= 1");
  Matrix c = Matrix::Zero(d, d + 1);
  const double rescale = std::sqrt(static_cast<double>(d + 1) / d);
  for (int k = 1; k <= d; ++k) {
    const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) c(k - 1, i) = -rescale / norm;
    c(k - 1, k) = rescale * k / norm;
  }
  return Placement(std::move(c));
}

Placement turan_simplex_placement(int n, int d) {
  if (d < 1 || n < d + 1 || n % (d + 1) != 0) {
    throw std::invalid_argument("turan_simplex_placement: d+1=" + std::to_string(d + 1) +
                                " must divide n=" + std::to_string(n));
  }
  const Placement simplex = regular_simplex(d);
  const Matrix& s = simplex.coords();
  const int block = n / (d + 1);
  Matrix c(d, n);
  for (int v = 0; v < n; ++v) c.col(v) = s.col(v / block);
  return Placement(std::move(c));
}

Placement crosspolytope_placement(int n, int d) {
  if (d < 1 || n < 2 * d || n % (2 * d) != 0) {
    throw std::invalid_argument("crosspolytope_placement: 2d=" + std::to_string(2 * d) +
                                " must divide n=" + std::to_string(n));
  }
  const int block = n / (2 * d);
  Matrix c = Matrix::Zero(d, n);
  for (int v = 0; v < n; ++v) {
    const int part = v / block;
    c(part / 2, v) = part % 2 == 0 ? 1.0 : -1.0;
  }
  return Placement(std::move(c));
}

CirclePlacement unit_circle_placement(std::span<const double> angles) {
  if (angles.empty()) throw std::invalid_argument("unit_circle_placement: no angles");
  Matrix c(2, static_cast<Eigen::Index>(angles.size()));
  for (std::size_t i = 0; i < angles.size(); ++i) {
    c(0, static_cast<Eigen::Index>(i)) = std::cos(angles[i]);
    c(1, static_cast<Eigen::Index>(i)) = std::sin(angles[i]);
  }
  CirclePlacement out{Placement(std::move(c))};
  out.centered = out.placement.coords().rowwise().sum().norm() <= 1e-10;
  out.injective = out.placement.is_injective();
  return out;
}

std::vector<double> roots_of_unity_angles(int n) {
  if (n < 1) throw std::invalid_argument("roots_of_unity_angles: n must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) a[k] = 2.0 * std::numbers::pi * k / n;
  return a;
}

std::vector<double> antipodal_pair_angles(std::span<const double> thetas) {
  std::vector<double> a;
  a.reserve(2 * thetas.size());
  for (double t : thetas) {
    a.push_back(t);
    a.push_back(t + std::numbers::pi);
  }
  return a;
}

Placement tetrahedron_h(double h) {
  if (!(h >= 0.0)) throw std::invalid_argument("tetrahedron_h: h must be >= 0");
  const double r = 1.0 / std::sqrt(3.0);  // circumradius of the unit triangle
  Matrix c = Matrix::Zero(3, 4);
  for (int k = 0; k < 3; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 3.0;
    c(0, k) = r * std::cos(t);
    c(1, k) = r * std::sin(t);
  }
  c(2, 3) = h;
  return Placement(std::move(c));
}

Placement replicate_placement(const Placement& p, int k) {
  if (k < 1) throw std::invalid_argument("replicate_placement: k must be >= 1");
  const int n = p.size();
  Matrix c(p.dim(), static_cast<Eigen::Index>(n) * k);
  for (int j = 0; j < k; ++j) c.middleCols(static_cast<Eigen::Index>(j) * n, n) = p.coords();
  return Placement(std::move(c));
}

namespace {

Vector unit_normal(Rng& rng, int d) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector x(d);
  do {
    for (int k = 0; k < d; ++k) x(k) = normal(rng);
  } while (x.norm() == 0.0);
  return x / x.norm();
}

}  // namespace

Placement random_sphere_placement(int n, int d, std::uint64_t seed, bool centered,
                                  std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("random_sphere_placement: n must be >= 1");
  if (d < 1) throw std::invalid_argument("random_sphere_placement: d must be >= 1");
  if (centered && n % 2 != 0) {
    throw std::invalid_argument("random_sphere_placement: centered placement needs even n");
  }
  Rng rng = make_stream(seed, "random_sphere_placement", stream);
  Matrix c(d, n);
  if (centered) {
    for (int i = 0; i < n / 2; ++i) {
      Vector x = unit_normal(rng, d);
      c.col(2 * i) = x;
      c.col(2 * i + 1) = -x;
    }
  } else {
    for (int i = 0; i < n; ++i) c.col(i) = unit_normal(rng, d);
  }
  return Placement(std::move(c));
}

Placement random_gaussian_placement(int n, int d, std::uint64_t seed, std::uint64_t stream) {
  if (n < 1 || d < 1) throw std::invalid_argument("random_gaussian_placement: n, d must be >= 1");
  Rng rng = make_stream(seed, "random_gaussian_placement", stream);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix c(d, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) c(k, i) = normal(rng);
  return Placement(std::move(c));
}

}  // namespace rigidspec
