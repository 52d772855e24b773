#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "rigidspec/canonical.hpp"
#include "rigidspec/framework.hpp"
#include "rigidspec/random.hpp"
#include "rigidspec/spectral.hpp"

using namespace rigidspec;

namespace {

Graph random_subgraph(int n, Rng& rng) {
  std::bernoulli_distribution coin(0.6);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Matrix random_orthogonal(int d, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("direction examples") {
  const Placement p(2, {{1, 0}, {0, 0}, {0, 0}});
  const Vector d01 = direction(p, 0, 1);
  CHECK(d01(0) == 1.0);
  CHECK(d01(1) == 0.0);
  CHECK(direction(p, 1, 2).norm() == 0.0);
  CHECK_THROWS_AS(direction(p, 1, 1), std::invalid_argument);

  const Placement q(3, {{1, 1, 0}, {0, 0, 0}});
  const Vector d = direction(q, 0, 1);
  CHECK(d(0) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d(1) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d(2) == 0.0);
}

TEST_CASE("rigidity matrix of K_2 in the line") {
  const Placement p(1, {{0}, {1}});
  const Matrix r = rigidity_matrix(complete_graph(2), p);
  REQUIRE(r.rows() == 2);
  REQUIRE(r.cols() == 1);
  CHECK(r(0, 0) == -1.0);
  CHECK(r(1, 0) == 1.0);
  const Matrix l = stiffness(complete_graph(2), p);
  CHECK(l(0, 0) == 1.0);
  CHECK(l(0, 1) == -1.0);
  CHECK(l(1, 1) == 1.0);
}

TEST_CASE("rigidity matrix rank of the simplex and constant placements") {
  for (int d = 2; d <= 5; ++d) {
    const Graph g = complete_graph(d + 1);
    const Matrix r = rigidity_matrix(g, regular_simplex(d));
    CHECK(numeric_rank(r) == d * (d + 1) - trivial_motion_count(d));
    const Placement constant(Matrix::Constant(d, d + 1, 0.25));
    CHECK(rigidity_matrix(g, constant).isZero(0.0));
    CHECK(stiffness(g, constant).isZero(0.0));
  }
}

TEST_CASE("rigidity matrix rejects a size mismatch") {
  CHECK_THROWS_AS(rigidity_matrix(complete_graph(4), regular_simplex(2)), std::invalid_argument);
}

TEST_CASE("equilateral triangle matrices") {
  const Graph k3 = complete_graph(3);
  const Placement tri = regular_simplex(2);
  CHECK(stiffness(k3, tri).trace() == doctest::Approx(6.0).epsilon(1e-14));
  const Matrix lower = lower_stiffness_direct(k3, tri);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(lower(i, j) == doctest::Approx(i == j ? 2.0 : 0.5).epsilon(1e-14));
}

TEST_CASE("collinear path lower stiffness") {
  const Graph path(3, {{0, 2}, {1, 2}});
  const Placement p(2, {{0, 0}, {2, 0}, {1, 0}});
  const Matrix lower = lower_stiffness_direct(path, p);
  CHECK(lower(0, 0) == 2.0);
  CHECK(lower(1, 1) == 2.0);
  CHECK(lower(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK((lower - lower_stiffness_product(path, p)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("coincident endpoints give a zero row and column") {
  const Graph k3 = complete_graph(3);
  const Placement p(2, {{0, 0}, {0, 0}, {1, 0}});
  const Matrix lower = lower_stiffness_direct(k3, p);
  // edge {0,1} is index 0
  CHECK(lower.row(0).isZero(0.0));
  CHECK(lower.col(0).isZero(0.0));
  CHECK(rigidity_matrix(k3, p).col(0).isZero(0.0));
  CHECK(lower(1, 1) == 2.0);
}

TEST_CASE("infinitesimal rigidity examples") {
  const Graph k4 = complete_graph(4);
  const Placement tet = regular_simplex(3);
  CHECK(is_infinitesimally_rigid(k4, tet));
  CHECK_FALSE(is_infinitesimally_rigid(remove_edge(k4, Edge(0, 1)), tet));
  CHECK_FALSE(is_infinitesimally_rigid(k4, Placement(Matrix::Zero(3, 4))));
  CHECK_THROWS_AS(is_infinitesimally_rigid(complete_graph(3), Placement(Matrix::Zero(3, 3))),
                  std::invalid_argument);
}

TEST_CASE("framework invariants on random instances") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng = make_stream(11, "framework-invariants", s);
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const Graph g = random_subgraph(n, rng);
    Placement p = random_gaussian_placement(n, d, 11, s);
    if (s % 5 == 0 && n >= 3) p.coords().col(1) = p.coords().col(0);  // force a coincident pair

    const FrameworkMatrices fm = build_framework(g, p);
    CHECK((fm.stiffness - fm.rigidity * fm.rigidity.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    const Matrix product = lower_stiffness_product(g, p);
    if (g.num_edges() > 0) {
      CHECK((product - fm.rigidity.transpose() * fm.rigidity).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((fm.lower_stiffness - product).cwiseAbs().maxCoeff() <= 1e-12);
    }

    int distinct = 0;
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      const double diag = fm.lower_stiffness(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      const bool apart = !p.coincident(g.edge(k).u, g.edge(k).v);
      CHECK(diag == (apart ? 2.0 : 0.0));
      distinct += apart;
    }
    CHECK(fm.stiffness.trace() == doctest::Approx(2.0 * distinct).epsilon(1e-12));
    if (g.num_edges() > 0) CHECK(fm.lower_stiffness.trace() == doctest::Approx(2.0 * distinct).epsilon(1e-12));

    // translations are in the kernel
    for (int c = 0; c < d; ++c) {
      Vector t = Vector::Zero(static_cast<Eigen::Index>(d) * n);
      for (int v = 0; v < n; ++v) t(static_cast<Eigen::Index>(v) * d + c) = 1.0;
      CHECK((fm.stiffness * t).norm() <= 1e-10 * t.norm());
    }
    // rotations v -> A p(v), A skew
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        Vector w(static_cast<Eigen::Index>(d) * n);
        for (int v = 0; v < n; ++v) {
          Vector pv = Vector::Zero(d);
          pv(a) = -p.point(v)(b);
          pv(b) = p.point(v)(a);
          w.segment(static_cast<Eigen::Index>(v) * d, d) = pv;
        }
        CHECK((fm.stiffness * w).norm() <= 1e-10 * std::max(1.0, w.norm()));
      }
    // PSD
    CHECK(symmetric_eigenvalues(fm.stiffness).front() >= -1e-10);
    if (g.num_edges() > 0) CHECK(symmetric_eigenvalues(fm.lower_stiffness).front() >= -1e-10);
  }
}

TEST_CASE("stiffness is invariant under similarity transforms") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_stream(5, "similarity", s);
    const int n = 7, d = 1 + static_cast<int>(s % 4);
    const Graph g = random_subgraph(n, rng);
    const Placement p = random_gaussian_placement(n, d, 5, s);
    const Matrix u = random_orthogonal(d, rng);
    Matrix moved = 3.7 * u * p.coords();
    moved.colwise() += Vector::Constant(d, -2.5);
    const Placement q(moved);
    const auto a = symmetric_eigenvalues(stiffness(g, p));
    const auto b = symmetric_eigenvalues(stiffness(g, q));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-10);

    Matrix shifted = 3.7 * p.coords();
    shifted.colwise() += Vector::Constant(d, 9.0);
    CHECK((stiffness(g, Placement(shifted)) - stiffness(g, p)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("placement accessors") {
  const Placement p(2, {{0, 0}, {1, 0}, {0, 0}});
  CHECK(p.dim() == 2);
  CHECK(p.size() == 3);
  CHECK(p.coincident(0, 2));
  CHECK_FALSE(p.is_injective());
  CHECK(p.image_size() == 2);
  CHECK(p.length(0, 1) == 1.0);
  const Vector flat = p.flattened();
  CHECK(flat(2) == 1.0);
  CHECK_THROWS_AS(Placement(2, {{0, 0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Placement(2, {}), std::invalid_argument);
}

TEST_CASE("placement JSON round trip and diagnostics") {
  const Placement p = random_gaussian_placement(5, 3, 2);
  const Placement q = placement_from_json(placement_to_json(p));
  CHECK(q.coords() == p.coords());

  using nlohmann::json;
  auto message = [](const json& j) {
    try {
      placement_from_json(j);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(json{{"points", {{1, 2}}}}).find("\"d\"") != std::string::npos);
  CHECK(message(json{{"d", 2}}).find("\"points\"") != std::string::npos);
  CHECK(message(json{{"d", 2}, {"points", {{1, 2}, {3}}}}).find("points[1]") != std::string::npos);
  CHECK(message(json{{"d", 2}, {"points", {{1, "x"}}}}).find("points[0]") != std::string::npos);
}

TEST_CASE("matrix CSV uses full precision") {
  Matrix m(1, 2);
  m << 1.0 / 3.0, -2.0;
  std::ostringstream out;
  write_matrix_csv(out, m);
  std::istringstream in(out.str());
  std::string a, b;
  std::getline(in, a, ',');
  std::getline(in, b);
  CHECK(std::stod(a) == 1.0 / 3.0);
  CHECK(std::stod(b) == -2.0);
}
