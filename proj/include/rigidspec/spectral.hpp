#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <span>
#include <vector>

#include "rigidspec/framework.hpp"
#include "rigidspec/graph.hpp"

namespace rigidspec {

struct Cluster {
  double value = 0.0;
  int multiplicity = 0;
};

/// Eigenvalues grouped into clusters of (value, multiplicity), ascending.
struct MultiplicitySpectrum {
  std::vector<Cluster> clusters;
  int total = 0;
  double cluster_tol = 0.0;

  /// Clusters with |value| > zero_tol, used to compare L against L^-.
  std::vector<Cluster> nonzero(double zero_tol) const;
};

struct EigenDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // column i pairs with values[i]
};

/// Ascending eigenvalues of a symmetric matrix. Throws std::invalid_argument
/// when M is not square or |M - M^t| exceeds 1e-12 max(1, |M|_max).
std::vector<double> symmetric_eigenvalues(const Matrix& m);
EigenDecomposition symmetric_eigen(const Matrix& m);

/// Greedy left-to-right clustering of sorted values: a value joins the open
/// cluster iff it lies within `tol` of the cluster's running mean.
MultiplicitySpectrum cluster_multiplicities(std::span<const double> sorted_eigs, double tol);

/// 1e-8 max(1, |M|_max).
double default_cluster_tol(const Matrix& m);

/// Eigensolve plus clustering at `tol` (negative selects the default).
MultiplicitySpectrum clustered_spectrum(const Matrix& m, double tol = -1.0);

/// lambda_{C(d+1,2)+1}(L(G,p)). Throws when n <= d.
double spectral_gap(const Graph& g, const Placement& p);

/// Count of singular values above rel_tol * sigma_max (0 for the zero matrix).
int numeric_rank(const Matrix& m, double rel_tol = 1e-9);

struct InterlacingReport {
  bool holds = true;
  /// Largest signed violation over all sandwiches; <= 0 when every bound holds.
  double max_violation = 0.0;
  std::vector<double> full;     // spectrum of L(G, p)
  std::vector<double> reduced;  // spectrum of L(G \ e, p)
};

/// Checks lambda_{i-1} <= lambda'_i <= lambda_i (lambda_0 = 0) with `slack`.
InterlacingReport interlacing_check(const Graph& g, const Edge& e, const Placement& p,
                                    double slack = 1e-9);

/// Value and multiplicity agreement between two cluster lists.
struct ClusterMatch {
  bool multiplicity_match = false;
  double max_value_error = 0.0;
};
ClusterMatch match_clusters(const std::vector<Cluster>& expected,
                            const std::vector<Cluster>& actual);

// Spectrum CSV: lines "value,multiplicity". JSON mirror records cluster_tol.
void write_spectrum_csv(std::ostream& out, const MultiplicitySpectrum& s);
nlohmann::json spectrum_to_json(const MultiplicitySpectrum& s);
nlohmann::json clusters_to_json(const std::vector<Cluster>& clusters);

}  // namespace rigidspec
