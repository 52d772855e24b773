#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigidspec/framework.hpp"
#include "rigidspec/graph.hpp"
#include "rigidspec/spectral.hpp"

namespace rigidspec {

/// Closed-form spectrum of L(G, p): ascending clusters, equal values merged,
/// zero multiplicities dropped.
struct PredictedSpectrum {
  std::vector<Cluster> clusters;
  std::string source;

  int total() const;
};

/// Sort, merge values within `merge_tol` and drop empty clusters.
PredictedSpectrum make_predicted(std::vector<Cluster> raw, std::string source,
                                 double merge_tol = 1e-12);

/// L(K_{d+1}, regular simplex). Requires d >= 2.
PredictedSpectrum simplex_spectrum_closed_form(int d);
/// L(T(n, d+1), q^triangle). Requires d >= 2 and (d+1) | n.
PredictedSpectrum turan_simplex_spectrum_closed_form(int n, int d);
/// L(T(n, 2d), q^diamond). Requires d >= 2 and 2d | n.
PredictedSpectrum crosspolytope_spectrum_closed_form(int n, int d);
/// L(K_4, tetrahedron_h(h)). Requires h > 0.
PredictedSpectrum tetrahedron_h_spectrum_closed_form(double h);
/// L(K_n, p) for centered injective unit-circle p. Requires n >= 3.
PredictedSpectrum circle_spectrum_closed_form(int n);

struct SpectrumComparison {
  bool multiplicity_match = false;
  double max_value_error = 0.0;
  bool pass = false;
};

/// Compares a predicted spectrum with the clustered spectrum of `m`.
SpectrumComparison compare_spectrum(const PredictedSpectrum& predicted,
                                    const MultiplicitySpectrum& computed,
                                    double value_tol = 1e-9);

/// Length-weighted vertex sums phi_f({i,j}) = (f_i + f_j) |p(i) - p(j)| on
/// K_n. Requires sum f = 0, unit norms, zero-sum p and image size >= 3;
/// the result is an eigenvector of L^-(K_n, p) for n/2.
Vector phi_f_vector(const Placement& p, std::span<const double> f);

/// Edge lengths on K_n; eigenvector of L^-(K_n, p) for eigenvalue n.
Vector edge_length_eigenvector(const Placement& p);

/// |L^- x - lambda x|_inf / max(1, |x|_inf).
double eigen_residual(const Matrix& lower, const Vector& x, double lambda);

struct EigenvectorConditions {
  bool off_support_cosines = false;  // condition (1)
  bool vertex_sums = false;          // condition (2)
  bool eigen_relation = false;       // condition (3)
  bool all() const { return off_support_cosines && vertex_sums && eigen_relation; }
};

/// Sufficient eigenvector conditions for phi and lambda, each checked at
/// `tol` relative to |phi|_inf. Throws when an edge has coincident endpoints.
EigenvectorConditions eigenvector_conditions_check(const Graph& g, const Placement& p, const Vector& phi,
                            double lambda, double tol = 1e-9);

/// Indicator of the star of vertex i in K_n.
Vector star_vector(int n, int i);

/// Orthogonal projection of R^{E(K_n)} onto span{star_vector(n, i)}.
Matrix kyfan_projection(int n);

struct EigensumBound {
  double sum = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // sum - bound
};

/// Sum of the n largest eigenvalues of L(K_n, p) against n^2/3 + n.
EigensumBound top_n_eigensum_bound_check(const Placement& p);

/// Sum of the three angle cosines of the triangle p(i), p(j), p(k).
double triangle_cosine_sum(const Placement& p, int i, int j, int k);

struct BoundReport {
  int n = 0;
  int d = 0;
  std::optional<double> lower_divisible;  // n / (2d), when 2d | n
  std::optional<double> lower_general;    // ceil(n / 2d) - 2d + 1
  std::optional<double> upper;            // 2n / (3(d-1)) + 1/3
  std::optional<double> gap_observed;
};

/// Populates whichever fields are in range; throws when none is.
BoundReport bound_report(int n, int d);
nlohmann::json bound_report_to_json(const BoundReport& r);

/// Rayleigh quotient of L^-(K_4, p) at the opposite-edge test vector, using
/// the pairing with the smallest sum of squared lengths as the left-out pair.
double k4_witness_bound(const Placement& p);

/// The same value from squared lengths alone: 2 s_3 / (s_1 + s_2).
double k4_witness_closed_form(const Placement& p);

/// max |L(K_n, p) - (n/2 I + (p p^t - x x^t - y y^t - r r^t) / 2)| for d = 2.
/// Throws with one diagnostic per violated hypothesis.
double zhu_identity_residual(const Placement& p);

}  // namespace rigidspec
