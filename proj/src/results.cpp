#include "rigidspec/results.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rigidspec {

int PredictedSpectrum::total() const {
  int t = 0;
  for (const Cluster& c : clusters) t += c.multiplicity;
  return t;
}

PredictedSpectrum make_predicted(std::vector<Cluster> raw, std::string source, double merge_tol) {
  std::erase_if(raw, [](const Cluster& c) { return c.multiplicity <= 0; });
  std::sort(raw.begin(), raw.end(),
            [](const Cluster& a, const Cluster& b) { return a.value < b.value; });
  PredictedSpectrum out;
  out.source = std::move(source);
  for (const Cluster& c : raw) {
    if (!out.clusters.empty() && std::abs(out.clusters.back().value - c.value) <= merge_tol) {
      out.clusters.back().multiplicity += c.multiplicity;
    } else {
      out.clusters.push_back(c);
    }
  }
  return out;
}

PredictedSpectrum simplex_spectrum_closed_form(int d) {
  if (d < 2) throw std::invalid_argument("simplex_spectrum_closed_form: d must be >= 2");
  return make_predicted({{0.0, d * (d + 1) / 2},
                         {1.0, (d + 1) * (d - 2) / 2},
                         {(d + 1) / 2.0, d},
                         {static_cast<double>(d + 1), 1}},
                        "simplex");
}

PredictedSpectrum turan_simplex_spectrum_closed_form(int n, int d) {
  if (d < 2 || n < d + 1 || n % (d + 1) != 0) {
    throw std::invalid_argument("turan_simplex_spectrum_closed_form: need d >= 2 and (d+1) | n");
  }
  const double nn = n;
  return make_predicted({{0.0, d * (d + 1) / 2},
                         {nn / (2.0 * (d + 1)), (n - d - 1) * (d - 1)},
                         {nn / (d + 1), (d - 2) * (d + 1) / 2},
                         {nn / 2.0, n - 1},
                         {nn, 1}},
                        "turan-simplex");
}

PredictedSpectrum crosspolytope_spectrum_closed_form(int n, int d) {
  if (d < 2 || n < 2 * d || n % (2 * d) != 0) {
    throw std::invalid_argument("crosspolytope_spectrum_closed_form: need d >= 2 and 2d | n");
  }
  const double nn = n;
  return make_predicted({{0.0, d * (d + 1) / 2},
                         {nn / (2.0 * d), n * (d - 1) - d * d},
                         {nn / d, d * (d - 1) / 2},
                         {nn / 2.0, n - 1},
                         {nn, 1}},
                        "crosspolytope");
}

PredictedSpectrum tetrahedron_h_spectrum_closed_form(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("tetrahedron_h_spectrum_closed_form: h must be > 0");
  const double inv = 1.0 / (h * h + 1.0 / 3.0);
  return make_predicted({{0.0, 6}, {1.0, 2}, {3.0 - inv, 1}, {1.5 + 0.5 * inv, 2}, {4.0, 1}},
                        "tetrahedron-h");
}

PredictedSpectrum circle_spectrum_closed_form(int n) {
  if (n < 3) throw std::invalid_argument("circle_spectrum_closed_form: n must be >= 3");
  return make_predicted({{0.0, 3}, {n / 2.0, 2 * n - 4}, {static_cast<double>(n), 1}}, "circle");
}

SpectrumComparison compare_spectrum(const PredictedSpectrum& predicted,
                                    const MultiplicitySpectrum& computed, double value_tol) {
  ClusterMatch m = match_clusters(predicted.clusters, computed.clusters);
  SpectrumComparison c;
  c.multiplicity_match = m.multiplicity_match;
  c.max_value_error = m.max_value_error;
  c.pass = m.multiplicity_match && m.max_value_error <= value_tol;
  return c;
}

namespace {

constexpr double kHypothesisTol = 1e-10;

void require_spherical_centered(const Placement& p, const char* who) {
  std::string problems;
  for (int i = 0; i < p.size(); ++i) {
    if (std::abs(p.point(i).norm() - 1.0) > kHypothesisTol) {
      problems += " point " + std::to_string(i) + " is not unit-norm;";
      break;
    }
  }
  if (p.coords().rowwise().sum().norm() > kHypothesisTol) problems += " points do not sum to zero;";
  if (p.image_size() < 3) problems += " image has fewer than 3 distinct points;";
  if (!problems.empty()) throw std::invalid_argument(std::string(who) + ":" + problems);
}

}  // namespace

Vector phi_f_vector(const Placement& p, std::span<const double> f) {
  const int n = p.size();
  if (static_cast<int>(f.size()) != n) {
    throw std::invalid_argument("phi_f_vector: f has " + std::to_string(f.size()) +
                                " entries, expected " + std::to_string(n));
  }
  double sum = 0.0, mag = 0.0;
  for (double x : f) {
    sum += x;
    mag += std::abs(x);
  }
  if (std::abs(sum) > 1e-12 * std::max(1.0, mag)) {
    throw std::invalid_argument("phi_f_vector: f does not sum to zero");
  }
  require_spherical_centered(p, "phi_f_vector");
  Graph kn = complete_graph(n);
  Vector phi(static_cast<Eigen::Index>(kn.num_edges()));
  for (std::size_t k = 0; k < kn.num_edges(); ++k) {
    const Edge& e = kn.edge(k);
    phi(static_cast<Eigen::Index>(k)) = (f[e.u] + f[e.v]) * p.length(e.u, e.v);
  }
  return phi;
}

Vector edge_length_eigenvector(const Placement& p) {
  if (p.image_size() < 2) throw std::invalid_argument("edge_length_eigenvector: p is constant");
  Graph kn = complete_graph(p.size());
  Vector phi(static_cast<Eigen::Index>(kn.num_edges()));
  for (std::size_t k = 0; k < kn.num_edges(); ++k) {
    const Edge& e = kn.edge(k);
    phi(static_cast<Eigen::Index>(k)) = p.length(e.u, e.v);
  }
  return phi;
}

double eigen_residual(const Matrix& lower, const Vector& x, double lambda) {
  const double scale = std::max(1.0, x.size() ? x.cwiseAbs().maxCoeff() : 0.0);
  return (lower * x - lambda * x).cwiseAbs().maxCoeff() / scale;
}

EigenvectorConditions eigenvector_conditions_check(const Graph& g, const Placement& p, const Vector& phi, double lambda,
                            double tol) {
  check_compatible(g, p);
  if (phi.size() != static_cast<Eigen::Index>(g.num_edges())) {
    throw std::invalid_argument("eigenvector_conditions_check: phi has wrong length");
  }
  for (const Edge& e : g.edges()) {
    if (p.coincident(e.u, e.v)) {
      throw std::invalid_argument("eigenvector_conditions_check: edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} has coincident endpoints");
    }
  }
  EigenvectorConditions rep{true, true, true};
  const double scale = phi.size() ? phi.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) return rep;
  const double slack = tol * scale;
  const Matrix cosines = lower_stiffness_direct(g, p);
  const auto m = static_cast<Eigen::Index>(g.num_edges());
  auto in_support = [&](Eigen::Index e) { return std::abs(phi(e)) > 1e-12 * scale; };

  auto for_each_adjacent = [&](Eigen::Index a, auto&& fn) {
    const Edge& e = g.edge(static_cast<std::size_t>(a));
    for (int end : {e.u, e.v})
      for (std::size_t b : g.incident(end))
        if (static_cast<Eigen::Index>(b) != a) fn(static_cast<Eigen::Index>(b));
  };

  for (Eigen::Index a = 0; a < m; ++a) {
    if (in_support(a)) {
      double acc = 0.0;
      for_each_adjacent(a, [&](Eigen::Index b) { acc += cosines(a, b) * phi(b); });
      if (std::abs(acc - (lambda - 2.0) * phi(a)) > slack) rep.eigen_relation = false;
    } else {
      std::optional<double> first;
      for_each_adjacent(a, [&](Eigen::Index b) {
        if (!in_support(b)) return;
        if (!first) {
          first = cosines(a, b);
        } else if (std::abs(*first - cosines(a, b)) > tol) {
          rep.off_support_cosines = false;
        }
      });
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    double acc = 0.0;
    for (std::size_t b : g.incident(v)) acc += phi(static_cast<Eigen::Index>(b));
    if (std::abs(acc) > slack) rep.vertex_sums = false;
  }
  return rep;
}

Vector star_vector(int n, int i) {
  Graph kn = complete_graph(n);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(kn.num_edges()));
  for (std::size_t k : kn.incident(i)) v(static_cast<Eigen::Index>(k)) = 1.0;
  return v;
}

Matrix kyfan_projection(int n) {
  if (n < 3) throw std::invalid_argument("kyfan_projection: n must be >= 3");
  Graph kn = complete_graph(n);
  const auto m = static_cast<Eigen::Index>(kn.num_edges());
  const double diag = 2.0 / (n - 1);
  const double adjacent = static_cast<double>(n - 3) / ((n - 1.0) * (n - 2.0));
  const double disjoint = -1.0 / ((n - 1.0) * (n - 2.0) / 2.0);
  Matrix proj(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      const int shared = kn.edge(static_cast<std::size_t>(a)).shared(kn.edge(static_cast<std::size_t>(b)));
      proj(a, b) = shared == 2 ? diag : shared == 1 ? adjacent : disjoint;
    }
  }
  return proj;
}

EigensumBound top_n_eigensum_bound_check(const Placement& p) {
  if (!p.is_injective()) throw std::invalid_argument("top_n_eigensum_bound_check: p is not injective");
  const int n = p.size();
  auto eigs = symmetric_eigenvalues(stiffness(complete_graph(n), p));
  EigensumBound b;
  b.sum = std::accumulate(eigs.end() - n, eigs.end(), 0.0);
  b.bound = n * static_cast<double>(n) / 3.0 + n;
  b.margin = b.sum - b.bound;
  return b;
}

double triangle_cosine_sum(const Placement& p, int i, int j, int k) {
  if (i == j || j == k || i == k) throw std::invalid_argument("triangle_cosine_sum: indices must differ");
  if (p.coincident(i, j) || p.coincident(j, k) || p.coincident(i, k)) {
    throw std::invalid_argument("triangle_cosine_sum: coincident points");
  }
  return direction(p, i, j).dot(direction(p, i, k)) + direction(p, j, i).dot(direction(p, j, k)) +
         direction(p, k, i).dot(direction(p, k, j));
}

BoundReport bound_report(int n, int d) {
  if (d < 3) throw std::invalid_argument("bound_report: d must be >= 3 (got " + std::to_string(d) + ")");
  if (n < d + 1) {
    throw std::invalid_argument("bound_report: n must be >= d+1 (got n=" + std::to_string(n) + ")");
  }
  BoundReport r;
  r.n = n;
  r.d = d;
  r.upper = 2.0 * n / (3.0 * (d - 1)) + 1.0 / 3.0;
  if (n >= 2 * d) {
    const int ceil_ratio = (n + 2 * d - 1) / (2 * d);
    r.lower_general = static_cast<double>(ceil_ratio - 2 * d + 1);
    if (n % (2 * d) == 0) r.lower_divisible = n / (2.0 * d);
  }
  return r;
}

nlohmann::json bound_report_to_json(const BoundReport& r) {
  nlohmann::json j = {{"n", r.n}, {"d", r.d}};
  auto put = [&](const char* key, const std::optional<double>& v, const char* formula) {
    if (v) j[key] = {{"value", *v}, {"formula", formula}};
  };
  put("lower_divisible", r.lower_divisible, "n/(2d), 2d | n");
  put("lower_general", r.lower_general, "ceil(n/(2d)) - 2d + 1");
  put("upper", r.upper, "2n/(3(d-1)) + 1/3");
  if (r.gap_observed) j["gap_observed"] = *r.gap_observed;
  return j;
}

namespace {

// Opposite-edge pairs of K_4 in canonical edge order 01,02,03,12,13,23.
constexpr std::array<std::array<int, 2>, 3> kOpposite{{{0, 5}, {1, 4}, {2, 3}}};

struct K4Pairing {
  std::array<double, 6> len{};
  std::array<double, 3> sq_sum{};
  int left_out = 0;  // pairing with the smallest squared-length sum
  std::array<int, 2> used{};
};

K4Pairing k4_pairing(const Placement& p) {
  if (p.size() != 4) throw std::invalid_argument("k4_witness_bound: needs exactly 4 points");
  if (!p.is_injective()) throw std::invalid_argument("k4_witness_bound: coincident points");
  Graph k4 = complete_graph(4);
  K4Pairing out;
  for (std::size_t k = 0; k < 6; ++k) out.len[k] = p.length(k4.edge(k).u, k4.edge(k).v);
  for (int m = 0; m < 3; ++m) {
    const auto [a, b] = kOpposite[m];
    out.sq_sum[m] = out.len[a] * out.len[a] + out.len[b] * out.len[b];
  }
  out.left_out = static_cast<int>(std::min_element(out.sq_sum.begin(), out.sq_sum.end()) -
                                  out.sq_sum.begin());
  int w = 0;
  for (int m = 0; m < 3; ++m)
    if (m != out.left_out) out.used[w++] = m;
  return out;
}

}  // namespace

double k4_witness_bound(const Placement& p) {
  K4Pairing pr = k4_pairing(p);
  Vector x = Vector::Zero(6);
  for (int e : kOpposite[pr.used[0]]) x(e) = pr.len[e];
  for (int e : kOpposite[pr.used[1]]) x(e) = -pr.len[e];
  const Matrix lower = lower_stiffness_direct(complete_graph(4), p);
  return x.dot(lower * x) / x.squaredNorm();
}

double k4_witness_closed_form(const Placement& p) {
  K4Pairing pr = k4_pairing(p);
  return 2.0 * pr.sq_sum[pr.left_out] / (pr.sq_sum[pr.used[0]] + pr.sq_sum[pr.used[1]]);
}

double zhu_identity_residual(const Placement& p) {
  std::string problems;
  if (p.dim() != 2) {
    throw std::invalid_argument("zhu_identity_residual: placement must be 2-dimensional");
  }
  for (int i = 0; i < p.size(); ++i) {
    if (std::abs(p.point(i).norm() - 1.0) > kHypothesisTol) {
      problems += " point " + std::to_string(i) + " is not unit-norm;";
    }
  }
  if (p.coords().rowwise().sum().norm() > kHypothesisTol) problems += " points do not sum to zero;";
  if (!p.is_injective()) problems += " placement is not injective;";
  if (!problems.empty()) throw std::invalid_argument("zhu_identity_residual:" + problems);

  const int n = p.size();
  const Eigen::Index dim = 2 * n;
  Vector pv = p.flattened();
  Vector x = Vector::Zero(dim), y = Vector::Zero(dim), r(dim);
  for (int i = 0; i < n; ++i) {
    x(2 * i) = 1.0;
    y(2 * i + 1) = 1.0;
    r(2 * i) = -p.coords()(1, i);
    r(2 * i + 1) = p.coords()(0, i);
  }
  Matrix model = (n / 2.0) * Matrix::Identity(dim, dim) +
                 0.5 * (pv * pv.transpose() - x * x.transpose() - y * y.transpose() -
                        r * r.transpose());
  return (stiffness(complete_graph(n), p) - model).cwiseAbs().maxCoeff();
}

}  // namespace rigidspec
