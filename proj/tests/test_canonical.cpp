#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rigidspec/canonical.hpp"
#include "rigidspec/spectral.hpp"

using namespace rigidspec;

namespace {

double max_norm_error(const Placement& p) {
  double err = 0.0;
  for (int i = 0; i < p.size(); ++i) err = std::max(err, std::abs(p.point(i).norm() - 1.0));
  return err;
}

double centroid_norm(const Placement& p) { return p.coords().rowwise().sum().norm(); }

}  // namespace

TEST_CASE("regular simplex") {
  const Placement s1 = regular_simplex(1);
  CHECK(s1.coords()(0, 0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s1.coords()(0, 1) == doctest::Approx(1.0).epsilon(1e-15));

  for (int d = 1; d <= 10; ++d) {
    const Placement s = regular_simplex(d);
    REQUIRE(s.dim() == d);
    REQUIRE(s.size() == d + 1);
    const Matrix gram = s.coords().transpose() * s.coords();
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) CHECK(std::abs(gram(i, j) - (i == j ? 1.0 : -1.0 / d)) <= 1e-12);
    CHECK(centroid_norm(s) <= 1e-14);
  }
  const Placement tet = regular_simplex(3);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(std::abs(tet.length(i, j) - std::sqrt(8.0 / 3.0)) <= 1e-14);
  CHECK_THROWS_AS(regular_simplex(0), std::invalid_argument);
}

TEST_CASE("turan simplex placement") {
  CHECK(turan_simplex_placement(4, 3).coords() == regular_simplex(3).coords());
  const Placement q = turan_simplex_placement(8, 3);
  for (int v = 0; v < 8; ++v) CHECK(q.point(v) == regular_simplex(3).point(v / 2));
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= 4; ++k) {
      const Placement p = turan_simplex_placement(k * (d + 1), d);
      CHECK(p.image_size() == d + 1);
      CHECK(max_norm_error(p) <= 1e-14);
      CHECK(centroid_norm(p) <= 1e-12);
      for (int v = 0; v < p.size(); ++v) CHECK(p.point(v) == regular_simplex(d).point(v / k));
    }
  CHECK_THROWS_AS(turan_simplex_placement(9, 3), std::invalid_argument);
}

TEST_CASE("replicated simplex has the turan simplex image multiset") {
  const Placement rep = replicate_placement(regular_simplex(3), 3);
  const Placement q = turan_simplex_placement(12, 3);
  for (int i = 0; i < 4; ++i) {
    int a = 0, b = 0;
    for (int v = 0; v < 12; ++v) {
      a += rep.point(v) == regular_simplex(3).point(i);
      b += q.point(v) == regular_simplex(3).point(i);
    }
    CHECK(a == 3);
    CHECK(b == 3);
  }
}

TEST_CASE("crosspolytope placement") {
  const Placement p = crosspolytope_placement(6, 3);
  for (int i = 0; i < 3; ++i) {
    Vector e = Vector::Zero(3);
    e(i) = 1.0;
    CHECK(p.point(2 * i) == e);
    CHECK(p.point(2 * i + 1) == -e);
  }
  const Placement q = crosspolytope_placement(12, 3);
  CHECK(q.image_size() == 6);
  CHECK(q.point(0) == q.point(1));
  CHECK(max_norm_error(q) == 0.0);
  CHECK(centroid_norm(q) == 0.0);
  CHECK_THROWS_AS(crosspolytope_placement(10, 3), std::invalid_argument);
}

TEST_CASE("unit circle placements") {
  const CirclePlacement roots = unit_circle_placement(roots_of_unity_angles(5));
  CHECK(roots.centered);
  CHECK(roots.injective);
  const std::vector<double> base = {0.3, 1.1};
  const CirclePlacement pairs = unit_circle_placement(antipodal_pair_angles(base));
  CHECK(pairs.placement.size() == 4);
  CHECK(pairs.centered);
  CHECK(pairs.injective);
  const std::vector<double> same = {0.7, 0.7, 0.7};
  const CirclePlacement flat = unit_circle_placement(same);
  CHECK_FALSE(flat.injective);
  CHECK_FALSE(flat.centered);
  CHECK_THROWS_AS(unit_circle_placement(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("tetrahedron family") {
  CHECK(tetrahedron_h(0.0).coords().row(2).isZero(0.0));
  const Placement reg = tetrahedron_h(std::sqrt(2.0 / 3.0));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(std::abs(reg.length(i, j) - 1.0) <= 1e-14);
  const Placement low = tetrahedron_h(1.0 / std::sqrt(6.0));
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(low.length(i, 3) - std::sqrt(0.5)) <= 1e-14);
    CHECK(std::abs(low.length(i, (i + 1) % 3) - 1.0) <= 1e-14);
  }
  CHECK_THROWS_AS(tetrahedron_h(-0.1), std::invalid_argument);

  const auto a = symmetric_eigenvalues(stiffness(complete_graph(4), reg));
  const auto b = symmetric_eigenvalues(stiffness(complete_graph(4), regular_simplex(3)));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9);
}

TEST_CASE("replicate placement") {
  const Placement p = regular_simplex(2);
  CHECK(replicate_placement(p, 1).coords() == p.coords());
  const Placement p2 = replicate_placement(p, 2);
  CHECK(p2.size() == 6);
  CHECK(p2.image_size() == 3);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) CHECK(p2.point(j * 3 + i) == p.point(i));
  CHECK_THROWS_AS(replicate_placement(p, 0), std::invalid_argument);
}

TEST_CASE("random sphere placements") {
  CHECK(random_sphere_placement(7, 3, 42, false).coords() ==
        random_sphere_placement(7, 3, 42, false).coords());
  CHECK(random_sphere_placement(7, 3, 42, false).coords() !=
        random_sphere_placement(7, 3, 43, false).coords());
  CHECK(random_sphere_placement(7, 3, 42, false, 1).coords() !=
        random_sphere_placement(7, 3, 42, false, 0).coords());
  const Placement c = random_sphere_placement(6, 3, 1, true);
  CHECK(centroid_norm(c) <= 1e-15);
  CHECK(max_norm_error(c) <= 1e-15);
  const Placement one = random_sphere_placement(1, 4, 9, false);
  CHECK(std::abs(one.point(0).norm() - 1.0) <= 1e-15);
  CHECK_THROWS_AS(random_sphere_placement(5, 3, 1, true), std::invalid_argument);
  CHECK_THROWS_AS(random_sphere_placement(0, 3, 1, false), std::invalid_argument);
}

TEST_CASE("canonical placements satisfy the spherical centered hypotheses") {
  for (int d = 2; d <= 5; ++d) {
    for (const Placement& p : {turan_simplex_placement(2 * (d + 1), d), crosspolytope_placement(4 * d, d)}) {
      CHECK(max_norm_error(p) <= 1e-14);
      CHECK(centroid_norm(p) <= 1e-12);
      CHECK(p.image_size() >= 3);
    }
  }
}
