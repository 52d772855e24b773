// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rigidspec/canonical.hpp"
#include "rigidspec/families.hpp"
#include "rigidspec/optimizer.hpp"
#include "rigidspec/probes.hpp"
#include "rigidspec/random.hpp"
#include "rigidspec/results.hpp"
#include "rigidspec/spectral.hpp"

using namespace rigidspec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  bool pass = true;
  double worst = 0.0;
  int instances = 0;

  void add(bool ok, double err = 0.0) {
    pass = pass && ok;
    worst = std::max(worst, err);
    ++instances;
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void spectrum_case(Tally& t, const PredictedSpectrum& pred, const Graph& g, const Placement& p) {
  const SpectrumComparison c = compare_spectrum(pred, clustered_spectrum(stiffness(g, p)), 1e-9);
  t.add(c.pass, c.multiplicity_match ? c.max_value_error : INFINITY);
}

Outcome spectrum_outcome(const Tally& t) {
  return {t.pass, fmt("%d instances, worst value error %.2e", t.instances, t.worst)};
}

Outcome ac1() {
  Tally t;
  for (int d = 2; d <= 10; ++d) spectrum_case(t, simplex_spectrum_closed_form(d), complete_graph(d + 1), regular_simplex(d));
  return spectrum_outcome(t);
}

Outcome ac2() {
  Tally t;
  const std::vector<std::pair<int, int>> dn = {{2, 6}, {2, 12}, {3, 8}, {3, 12}, {3, 24}, {4, 10}, {4, 20}, {5, 12}};
  for (auto [d, n] : dn)
    spectrum_case(t, turan_simplex_spectrum_closed_form(n, d), turan_graph(n, d + 1).first, turan_simplex_placement(n, d));
  return spectrum_outcome(t);
}

Outcome ac3() {
  Tally t;
  const std::vector<std::pair<int, int>> dn = {{2, 4}, {2, 8}, {3, 6}, {3, 12}, {3, 24}, {4, 8}, {4, 16}};
  for (auto [d, n] : dn)
    spectrum_case(t, crosspolytope_spectrum_closed_form(n, d), turan_graph(n, 2 * d).first, crosspolytope_placement(n, d));
  return spectrum_outcome(t);
}

Outcome ac4() {
  Tally t;
  const double threshold = 1.0 / std::sqrt(6.0);
  for (double h : {0.2, threshold, std::sqrt(2.0 / 3.0), 1.0, 5.0}) {
    const Placement p = tetrahedron_h(h);
    spectrum_case(t, tetrahedron_h_spectrum_closed_form(h), complete_graph(4), p);
    if (h >= threshold) {
      const double err = std::abs(spectral_gap(complete_graph(4), p) - 1.0);
      t.add(err <= 1e-9, err);
    }
  }
  return spectrum_outcome(t);
}

Outcome ac5() {
  Tally t;
  double worst_zhu = 0.0;
  for (int n = 3; n <= 20; ++n) {
    std::vector<std::vector<double>> angle_sets = {roots_of_unity_angles(n)};
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng = make_stream(1, "acceptance-circle", static_cast<std::uint64_t>(n) * 16 + s);
      std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
      std::vector<double> base;
      std::vector<double> angles;
      if (n % 2 == 1) {
        const double r = u(rng);
        for (int k = 0; k < 3; ++k) angles.push_back(r + 2.0 * std::numbers::pi * k / 3.0);
      }
      for (int k = 0; k < n / 2 - (n % 2 == 1 ? 1 : 0); ++k) base.push_back(u(rng));
      for (double a : antipodal_pair_angles(base)) angles.push_back(a);
      angle_sets.push_back(angles);
    }
    for (const auto& angles : angle_sets) {
      const CirclePlacement c = unit_circle_placement(angles);
      if (!c.centered || !c.injective || c.placement.size() != n) {
        t.add(false, INFINITY);
        continue;
      }
      spectrum_case(t, circle_spectrum_closed_form(n), complete_graph(n), c.placement);
      const double z = zhu_identity_residual(c.placement);
      worst_zhu = std::max(worst_zhu, z);
      t.add(z <= 1e-10);
    }
  }
  Outcome o = spectrum_outcome(t);
  o.detail += fmt(", worst zhu residual %.2e", worst_zhu);
  return o;
}

Outcome ac6() {
  Tally t;
  int rank_checks = 0;
  auto residuals = [&](const Matrix& lower, const std::vector<Vector>& vs, double lambda) {
    for (const Vector& v : vs) {
      const double r = eigen_residual(lower, v, lambda);
      t.add(r <= 1e-10, r);
    }
  };
  auto rank_of = [](std::vector<Vector> vs, const std::vector<Vector>& more = {}) {
    vs.insert(vs.end(), more.begin(), more.end());
    if (vs.empty()) return 0;
    Matrix m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
    return numeric_rank(m);
  };
  for (int d = 2; d <= 5; ++d)
    for (int n = d + 1; n <= 24; n += d + 1) {
      const TuranSimplexFamilies f = turan_simplex_families(n, d);
      const Matrix lower = lower_stiffness_direct(f.graph, f.placement);
      residuals(lower, f.phi, f.phi_eigenvalue);
      residuals(lower, f.psi, f.psi_eigenvalue);
      t.add(rank_of(f.phi) == (d - 2) * (d + 1) / 2);
      t.add(rank_of(f.psi) == (n - d - 1) * (d - 1));
      rank_checks += 2;
    }
  for (int d = 2; d <= 4; ++d)
    for (int n = 2 * d; n <= 24; n += 2 * d) {
      const CrossFamilies f = crosspolytope_families(n, d);
      const Matrix lower = lower_stiffness_direct(f.graph, f.placement);
      residuals(lower, f.phi, f.phi_eigenvalue);
      residuals(lower, f.big_psi, f.half_eigenvalue);
      residuals(lower, f.f, f.half_eigenvalue);
      t.add(rank_of(f.phi) == d * (d - 1) / 2);
      t.add(rank_of(f.big_psi, f.f) == n * (d - 1) - d * d);
      rank_checks += 2;
    }
  for (int n = 4; n <= 12; n += 2)
    for (int d = 2; d <= 4; ++d) {
      const Placement p = random_sphere_placement(n, d, 1, true, static_cast<std::uint64_t>(n * 8 + d));
      const Matrix lower = lower_stiffness_direct(complete_graph(n), p);
      std::vector<Vector> phis;
      for (std::uint64_t s = 0; s < 20; ++s) {
        Rng rng = make_stream(1, "acceptance-phi-f", static_cast<std::uint64_t>(n * 1000 + d * 100) + s);
        std::normal_distribution<double> normal;
        std::vector<double> f(static_cast<std::size_t>(n));
        double mean = 0.0;
        for (double& x : f) mean += (x = normal(rng)) / n;
        for (double& x : f) x -= mean;
        phis.push_back(phi_f_vector(p, f));
      }
      residuals(lower, phis, n / 2.0);
      t.add(rank_of(phis) == std::min(20, n - 1));
      ++rank_checks;
      for (std::uint64_t s = 0; s < 5; ++s) {
        const Placement q = random_gaussian_placement(n, d, 2, static_cast<std::uint64_t>(n * 8 + d) * 8 + s);
        residuals(lower_stiffness_direct(complete_graph(n), q), {edge_length_eigenvector(q)}, static_cast<double>(n));
      }
    }
  return {t.pass, fmt("%d checks (%d rank checks), worst residual %.2e", t.instances, rank_checks, t.worst)};
}

Outcome ac7() {
  Tally t;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Rng rng = make_stream(1, "acceptance-interlacing", s);
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const double keep = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    if (edges.empty()) edges.emplace_back(0, 1);
    const Graph g(n, edges);
    const Edge e = g.edge(std::uniform_int_distribution<std::size_t>(0, g.num_edges() - 1)(rng));
    const InterlacingReport r = interlacing_check(g, e, random_gaussian_placement(n, d, 1, s), 1e-9);
    t.add(r.holds, r.max_violation);
  }
  return {t.pass, fmt("%d instances, worst violation %.2e", t.instances, t.worst)};
}

Outcome ac8() {
  Tally proj;
  for (int n = 3; n <= 20; ++n) {
    const Matrix p = kyfan_projection(n);
    double err = std::max((p * p - p).cwiseAbs().maxCoeff(), (p.transpose() - p).cwiseAbs().maxCoeff());
    for (int i = 0; i < n; ++i) {
      const Vector v = star_vector(n, i);
      err = std::max(err, (p * v - v).cwiseAbs().maxCoeff());
    }
    proj.add(err <= 1e-12, err);
  }
  Tally sums;
  double min_margin = INFINITY;
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng = make_stream(1, "acceptance-eigensum", s);
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const Placement p = random_gaussian_placement(n, d, 3, s);
    if (!p.is_injective()) continue;
    const EigensumBound b = top_n_eigensum_bound_check(p);
    min_margin = std::min(min_margin, b.margin);
    sums.add(b.margin >= -1e-9);
  }
  const double eq = top_n_eigensum_bound_check(regular_simplex(2)).sum;
  const bool ok = proj.pass && sums.pass && sums.instances == 500 && std::abs(eq - 6.0) <= 1e-9;
  return {ok, fmt("projection error %.2e, %d placements, min margin %.2e, K3 sum %.12f", proj.worst,
                  sums.instances, min_margin, eq)};
}

Outcome ac9() {
  Tally t;
  for (int d = 3; d <= 4; ++d)
    for (int n = 2 * d; n <= 48; n += 2 * d) {
      const double target = n / (2.0 * d);
      const double gap = spectral_gap(turan_graph(n, 2 * d).first, crosspolytope_placement(n, d));
      const double err = std::abs(gap - target);
      const BoundReport r = bound_report(n, d);
      t.add(err <= 1e-9 && target <= *r.upper + 1e-12, err);
    }
  return {t.pass, fmt("%d instances, worst gap error %.2e", t.instances, t.worst)};
}

Outcome ac10() {
  OptimizerConfig c;
  c.restarts = 32;
  c.seed = 1;
  const OptimizeResult k4 = gap_ascent(complete_graph(4), 3, c);
  double worst_witness = -INFINITY;
  bool witness_ok = true;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Placement p = random_gaussian_placement(4, 3, 10, s);
    const double w = k4_witness_bound(p);
    worst_witness = std::max(worst_witness, w);
    witness_ok = witness_ok && w <= 1.0 + 1e-12 && w >= spectral_gap(complete_graph(4), p) - 1e-9;
  }
  const bool cap = k4_witness_bound(k4.best_placement) <= 1.0 + 1e-12;
  OptimizerConfig c3;
  c3.seed = 1;
  const OptimizeResult k3 = gap_ascent(complete_graph(3), 2, c3);
  const bool ok = k4.best_gap >= 0.999 && k4.best_gap <= 1.0 + 1e-6 && witness_ok && cap && k3.best_gap >= 1.499;
  return {ok, fmt("K4 best %.12f, max witness %.12f, K3 best %.12f", k4.best_gap, worst_witness, k3.best_gap)};
}

Outcome ac11() {
  ProbeParams top;
  top.n = {3, 10};
  top.d = {2, 4};
  top.samples = 200;
  top.seed = 3;
  const auto a = conjecture_probe("top-n-sum", top);
  const double min_margin = a.at("min_margin").get<double>();

  ProbeParams sph;
  sph.n = {8, 8};
  sph.d = {3, 3};
  sph.samples = 50;
  const auto b = conjecture_probe("spherical-second-eig", sph);
  bool floor = !b.at("instances").empty();
  for (const auto& inst : b.at("instances")) floor = floor && inst.at("floor_holds").get<bool>();
  const bool ok = min_margin >= -1e-9 && floor;
  return {ok, fmt("top-n-sum min margin %.2e over %zu rows, spherical floor holds on %zu samples", min_margin,
                  a.at("instances").size(), b.at("instances").size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 simplex spectra", ac1},
      {"AC2 turan simplex spectra", ac2},
      {"AC3 crosspolytope spectra", ac3},
      {"AC4 tetrahedron family", ac4},
      {"AC5 circle spectra", ac5},
      {"AC6 eigenvector families", ac6},
      {"AC7 edge-removal interlacing", ac7},
      {"AC8 ky fan projection and eigensum", ac8},
      {"AC9 bounds sandwich", ac9},
      {"AC10 optimizer recovery", ac10},
      {"AC11 conjecture probes", ac11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed;
}
