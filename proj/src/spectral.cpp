#include "rigidspec/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rigidspec {

namespace {

void require_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("symmetric eigensolve: matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + ", not square");
  }
  if (m.size() == 0) return;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw std::invalid_argument("symmetric eigensolve: matrix is not symmetric (max |M - M^t| = " +
                                std::to_string(asym) + ")");
  }
}

}  // namespace

std::vector<Cluster> MultiplicitySpectrum::nonzero(double zero_tol) const {
  std::vector<Cluster> out;
  for (const Cluster& c : clusters)
    if (std::abs(c.value) > zero_tol) out.push_back(c);
  return out;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
  require_symmetric(m);
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolve: no convergence");
  }
  const Vector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

EigenDecomposition symmetric_eigen(const Matrix& m) {
  require_symmetric(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolve: no convergence");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

MultiplicitySpectrum cluster_multiplicities(std::span<const double> eigs, double tol) {
  MultiplicitySpectrum s;
  s.cluster_tol = tol;
  double sum = 0.0;
  for (double x : eigs) {
    if (!s.clusters.empty() && std::abs(x - s.clusters.back().value) <= tol) {
      Cluster& c = s.clusters.back();
      sum += x;
      ++c.multiplicity;
      c.value = sum / c.multiplicity;
    } else {
      s.clusters.push_back({x, 1});
      sum = x;
    }
    ++s.total;
  }
  return s;
}

double default_cluster_tol(const Matrix& m) {
  const double mx = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  return 1e-8 * std::max(1.0, mx);
}

MultiplicitySpectrum clustered_spectrum(const Matrix& m, double tol) {
  auto eigs = symmetric_eigenvalues(m);
  return cluster_multiplicities(eigs, tol < 0 ? default_cluster_tol(m) : tol);
}

double spectral_gap(const Graph& g, const Placement& p) {
  check_compatible(g, p);
  const int d = p.dim();
  if (p.size() <= d) {
    throw std::invalid_argument("spectral_gap: requires n > d (n=" + std::to_string(p.size()) +
                                ", d=" + std::to_string(d) + ")");
  }
  auto eigs = symmetric_eigenvalues(stiffness(g, p));
  return eigs[static_cast<std::size_t>(trivial_motion_count(d))];
}

int numeric_rank(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rel_tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

InterlacingReport interlacing_check(const Graph& g, const Edge& e, const Placement& p,
                                    double slack) {
  Graph reduced = remove_edge(g, e);
  InterlacingReport rep;
  rep.full = symmetric_eigenvalues(stiffness(g, p));
  rep.reduced = symmetric_eigenvalues(stiffness(reduced, p));
  rep.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rep.full.size(); ++i) {
    const double below = i == 0 ? 0.0 : rep.full[i - 1];
    const double above = rep.full[i];
    const double mid = rep.reduced[i];
    rep.max_violation = std::max({rep.max_violation, below - mid, mid - above});
  }
  rep.holds = rep.max_violation <= slack;
  return rep;
}

ClusterMatch match_clusters(const std::vector<Cluster>& expected,
                            const std::vector<Cluster>& actual) {
  ClusterMatch m;
  m.multiplicity_match = expected.size() == actual.size();
  const std::size_t k = std::min(expected.size(), actual.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (expected[i].multiplicity != actual[i].multiplicity) m.multiplicity_match = false;
    m.max_value_error = std::max(m.max_value_error, std::abs(expected[i].value - actual[i].value));
  }
  if (expected.size() != actual.size()) m.max_value_error = std::numeric_limits<double>::infinity();
  return m;
}

void write_spectrum_csv(std::ostream& out, const MultiplicitySpectrum& s) {
  char buf[40];
  for (const Cluster& c : s.clusters) {
    std::snprintf(buf, sizeof buf, "%.17e", c.value);
    out << buf << ',' << c.multiplicity << '\n';
  }
}

nlohmann::json clusters_to_json(const std::vector<Cluster>& clusters) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Cluster& c : clusters) arr.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return arr;
}

nlohmann::json spectrum_to_json(const MultiplicitySpectrum& s) {
  return {{"clusters", clusters_to_json(s.clusters)},
          {"total", s.total},
          {"cluster_tol", s.cluster_tol}};
}

}  // namespace rigidspec
