#include "rigidspec/framework.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rigidspec/spectral.hpp"

namespace rigidspec {

Placement::Placement(int d, const std::vector<std::vector<double>>& points) {
  if (d < 1) throw std::invalid_argument("placement: dimension d must be >= 1");
  if (points.empty()) throw std::invalid_argument("placement: needs at least one point");
  coords_.resize(d, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != d) {
      throw std::invalid_argument("placement: point " + std::to_string(i) + " has " +
                                  std::to_string(points[i].size()) + " coordinates, expected " +
                                  std::to_string(d));
    }
    for (int k = 0; k < d; ++k) coords_(k, static_cast<Eigen::Index>(i)) = points[i][k];
  }
}

Placement::Placement(Matrix coords) : coords_(std::move(coords)) {
  if (coords_.rows() < 1) throw std::invalid_argument("placement: dimension d must be >= 1");
  if (coords_.cols() < 1) throw std::invalid_argument("placement: needs at least one point");
}

namespace {

std::vector<int> lexicographic_order(const Matrix& c) {
  std::vector<int> order(static_cast<std::size_t>(c.cols()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    for (Eigen::Index k = 0; k < c.rows(); ++k) {
      if (c(k, a) != c(k, b)) return c(k, a) < c(k, b);
    }
    return false;
  });
  return order;
}

}  // namespace

int Placement::image_size() const {
  auto order = lexicographic_order(coords_);
  int distinct = 1;
  for (std::size_t i = 1; i < order.size(); ++i)
    if (coords_.col(order[i]) != coords_.col(order[i - 1])) ++distinct;
  return distinct;
}

bool Placement::is_injective() const { return image_size() == size(); }

Vector Placement::flattened() const {
  return Eigen::Map<const Vector>(coords_.data(), coords_.size());
}

Vector direction(const Placement& p, int u, int v) {
  if (u == v) throw std::invalid_argument("direction: u and v must differ");
  Vector diff = p.point(u) - p.point(v);
  if (p.coincident(u, v)) return Vector::Zero(p.dim());
  return diff / diff.norm();
}

void check_compatible(const Graph& g, const Placement& p) {
  if (g.num_vertices() != p.size()) {
    throw std::invalid_argument("framework: graph has " + std::to_string(g.num_vertices()) +
                                " vertices but placement has " + std::to_string(p.size()) +
                                " points");
  }
}

Matrix rigidity_matrix(const Graph& g, const Placement& p) {
  check_compatible(g, p);
  const int d = p.dim();
  Matrix r = Matrix::Zero(static_cast<Eigen::Index>(d) * p.size(),
                          static_cast<Eigen::Index>(g.num_edges()));
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edge(k);
    Vector dir = direction(p, e.u, e.v);
    auto col = static_cast<Eigen::Index>(k);
    r.block(static_cast<Eigen::Index>(e.u) * d, col, d, 1) = dir;
    r.block(static_cast<Eigen::Index>(e.v) * d, col, d, 1) = -dir;
  }
  return r;
}

Matrix stiffness(const Graph& g, const Placement& p) {
  Matrix r = rigidity_matrix(g, p);
  Matrix l = r * r.transpose();
  return 0.5 * (l + l.transpose());
}

Matrix lower_stiffness_product(const Graph& g, const Placement& p) {
  Matrix r = rigidity_matrix(g, p);
  Matrix l = r.transpose() * r;
  return 0.5 * (l + l.transpose());
}

Matrix lower_stiffness_direct(const Graph& g, const Placement& p) {
  check_compatible(g, p);
  const auto m = static_cast<Eigen::Index>(g.num_edges());
  Matrix out = Matrix::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const Edge& e1 = g.edge(static_cast<std::size_t>(a));
    if (!p.coincident(e1.u, e1.v)) out(a, a) = 2.0;
  }
  // Adjacent pairs: walk each vertex star.
  for (int i = 0; i < g.num_vertices(); ++i) {
    const auto& star = g.incident(i);
    for (std::size_t x = 0; x < star.size(); ++x) {
      const Edge& e1 = g.edge(star[x]);
      int j = e1.u == i ? e1.v : e1.u;
      Vector dij = direction(p, i, j);
      for (std::size_t y = x + 1; y < star.size(); ++y) {
        const Edge& e2 = g.edge(star[y]);
        int k = e2.u == i ? e2.v : e2.u;
        double c = dij.dot(direction(p, i, k));
        auto a = static_cast<Eigen::Index>(star[x]);
        auto b = static_cast<Eigen::Index>(star[y]);
        out(a, b) = c;
        out(b, a) = c;
      }
    }
  }
  return out;
}

FrameworkMatrices build_framework(const Graph& g, const Placement& p) {
  FrameworkMatrices fm;
  fm.rigidity = rigidity_matrix(g, p);
  Matrix l = fm.rigidity * fm.rigidity.transpose();
  fm.stiffness = 0.5 * (l + l.transpose());
  fm.lower_stiffness = lower_stiffness_direct(g, p);
  return fm;
}

bool is_infinitesimally_rigid(const Graph& g, const Placement& p, double rel_tol) {
  check_compatible(g, p);
  const int d = p.dim();
  const int n = p.size();
  if (n <= d) {
    throw std::invalid_argument("is_infinitesimally_rigid: requires n > d (n=" +
                                std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  return numeric_rank(rigidity_matrix(g, p), rel_tol) == d * n - trivial_motion_count(d);
}

nlohmann::json placement_to_json(const Placement& p) {
  nlohmann::json points = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) {
    nlohmann::json pt = nlohmann::json::array();
    for (int k = 0; k < p.dim(); ++k) pt.push_back(p.coords()(k, i));
    points.push_back(std::move(pt));
  }
  return {{"d", p.dim()}, {"points", std::move(points)}};
}

Placement placement_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("placement JSON: expected an object");
  if (!j.contains("d") || !j["d"].is_number_integer()) {
    throw std::invalid_argument("placement JSON: field \"d\" missing or not an integer");
  }
  if (!j.contains("points") || !j["points"].is_array()) {
    throw std::invalid_argument("placement JSON: field \"points\" missing or not an array");
  }
  const int d = j["d"].get<int>();
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    const auto& row = j["points"][i];
    if (!row.is_array()) {
      throw std::invalid_argument("placement JSON: points[" + std::to_string(i) + "] is not an array");
    }
    std::vector<double> pt;
    for (const auto& x : row) {
      if (!x.is_number()) {
        throw std::invalid_argument("placement JSON: points[" + std::to_string(i) +
                                    "] has a non-numeric coordinate");
      }
      pt.push_back(x.get<double>());
    }
    if (static_cast<int>(pt.size()) != d) {
      throw std::invalid_argument("placement JSON: points[" + std::to_string(i) + "] has " +
                                  std::to_string(pt.size()) + " coordinates, expected " +
                                  std::to_string(d));
    }
    pts.push_back(std::move(pt));
  }
  return Placement(d, pts);
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  char buf[40];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17e", m(i, j));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace rigidspec
