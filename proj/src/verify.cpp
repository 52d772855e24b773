#include "rigidspec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rigidspec/canonical.hpp"
#include "rigidspec/families.hpp"
#include "rigidspec/parallel.hpp"
#include "rigidspec/random.hpp"
#include "rigidspec/results.hpp"
#include "rigidspec/spectral.hpp"

namespace rigidspec {

using nlohmann::json;

Grid Grid::parse(const std::string& text) {
  Grid g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("grid: expected key=lo..hi, got \"" + item + "\"");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      const auto dots = value.find("..");
      std::size_t used = 0;
      int lo = 0, hi = 0;
      if (dots == std::string::npos) {
        lo = hi = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
      } else {
        const std::string a = value.substr(0, dots), b = value.substr(dots + 2);
        lo = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument("trailing");
        hi = std::stoi(b, &used);
        if (used != b.size()) throw std::invalid_argument("trailing");
      }
      if (lo > hi) throw std::invalid_argument("empty");
      g.ranges_[key] = {lo, hi};
    } catch (const std::exception&) {
      throw std::invalid_argument("grid: bad range for \"" + key + "\": \"" + value + "\"");
    }
  }
  return g;
}

std::pair<int, int> Grid::range(const std::string& key, std::pair<int, int> fallback) const {
  auto it = ranges_.find(key);
  return it == ranges_.end() ? fallback : it->second;
}

bool VerifyReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
}

double VerifyReport::worst_error() const {
  double w = 0.0;
  for (const auto& e : entries) w = std::max(w, e.max_value_error);
  return w;
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const VerifyEntry& e) { return !e.pass; }));
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"simplex", "turan",       "cross",
                                                 "tetra",   "circle",      "interlacing",
                                                 "kyfan",   "families"};
  return names;
}

namespace {

constexpr double kValueTol = 1e-9;
constexpr double kResidualTol = 1e-10;

double finite_or_max(double x) { return std::isfinite(x) ? x : std::numeric_limits<double>::max(); }

VerifyEntry spectrum_entry(std::string theorem, json instance, const PredictedSpectrum& pred,
                           const Matrix& l) {
  const MultiplicitySpectrum got = clustered_spectrum(l);
  const SpectrumComparison cmp = compare_spectrum(pred, got, kValueTol);
  VerifyEntry e;
  e.theorem = std::move(theorem);
  e.instance = std::move(instance);
  e.predicted = clusters_to_json(pred.clusters);
  e.computed = spectrum_to_json(got);
  e.max_value_error = finite_or_max(cmp.max_value_error);
  e.multiplicity_match = cmp.multiplicity_match;
  e.pass = cmp.pass;
  return e;
}

VerifyEntry scalar_entry(std::string theorem, json instance, double predicted, double computed,
                         double error, double tol) {
  VerifyEntry e;
  e.theorem = std::move(theorem);
  e.instance = std::move(instance);
  e.predicted = predicted;
  e.computed = computed;
  e.max_value_error = error;
  e.pass = error <= tol;
  return e;
}

void require_keys(const Grid& grid, std::initializer_list<const char*> keys,
                  const std::string& suite) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, r] : grid.ranges()) {
    if (!allowed.count(k)) {
      throw std::invalid_argument("verify " + suite + ": grid key \"" + k + "\" is not used");
    }
  }
}

int samples_or(const VerifyOptions& o, int fallback) { return o.samples >= 0 ? o.samples : fallback; }

void suite_simplex(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  const auto [lo, hi] = o.grid.range("d", {2, 10});
  for (int d = std::max(lo, 2); d <= hi; ++d) {
    const Graph g = complete_graph(d + 1);
    out.push_back(spectrum_entry("simplex-spectrum", {{"d", d}}, simplex_spectrum_closed_form(d),
                                 stiffness(g, regular_simplex(d))));
  }
}

void suite_turan(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  const auto [nlo, nhi] = o.grid.range("n", {3, 24});
  const auto [dlo, dhi] = o.grid.range("d", {2, 5});
  for (int d = std::max(dlo, 2); d <= dhi; ++d) {
    for (int n = std::max(nlo, d + 1); n <= nhi; ++n) {
      if (n % (d + 1) != 0) continue;
      const Graph g = turan_graph(n, d + 1).first;
      out.push_back(spectrum_entry("turan-simplex-spectrum", {{"n", n}, {"d", d}},
                                   turan_simplex_spectrum_closed_form(n, d),
                                   stiffness(g, turan_simplex_placement(n, d))));
    }
  }
}

void suite_cross(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  const auto [nlo, nhi] = o.grid.range("n", {4, 24});
  const auto [dlo, dhi] = o.grid.range("d", {2, 4});
  for (int d = std::max(dlo, 2); d <= dhi; ++d) {
    for (int n = std::max(nlo, 2 * d); n <= nhi; ++n) {
      if (n % (2 * d) != 0) continue;
      const Graph g = turan_graph(n, 2 * d).first;
      out.push_back(spectrum_entry("crosspolytope-spectrum", {{"n", n}, {"d", d}},
                                   crosspolytope_spectrum_closed_form(n, d),
                                   stiffness(g, crosspolytope_placement(n, d))));
    }
  }
}

void suite_tetra(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  std::vector<double> hs = {0.2, 1.0 / std::sqrt(6.0), std::sqrt(2.0 / 3.0), 1.0, 5.0};
  Rng rng = make_stream(o.seed, "verify-tetra");
  std::uniform_real_distribution<double> uni(0.05, 5.0);
  for (int s = 0; s < samples_or(o, 5); ++s) hs.push_back(uni(rng));
  const Graph k4 = complete_graph(4);
  const double threshold = 1.0 / std::sqrt(6.0);
  for (double h : hs) {
    const Matrix l = stiffness(k4, tetrahedron_h(h));
    out.push_back(spectrum_entry("tetrahedron-spectrum", {{"h", h}},
                                 tetrahedron_h_spectrum_closed_form(h), l));
    if (h >= threshold - 1e-15) {
      const double gap = symmetric_eigenvalues(l)[6];
      out.push_back(scalar_entry("tetrahedron-gap-one", {{"h", h}}, 1.0, gap,
                                 std::abs(gap - 1.0), kValueTol));
    }
  }
}

// Centered injective circle placements: antipodal pairs for even n; for odd
// n a rotated equilateral triple plus (n-3)/2 antipodal pairs.
std::vector<double> random_centered_angles(int n, Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
  std::vector<double> base;
  std::vector<double> angles;
  if (n % 2 == 1) {
    const double t = uni(rng);
    for (int k = 0; k < 3; ++k) angles.push_back(t + 2.0 * std::numbers::pi * k / 3.0);
  }
  for (int i = 0; i < (n - static_cast<int>(angles.size())) / 2; ++i) base.push_back(uni(rng));
  for (double a : antipodal_pair_angles(base)) angles.push_back(a);
  return angles;
}

void suite_circle(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  const auto [lo, hi] = o.grid.range("n", {3, 20});
  const int samples = samples_or(o, 5);
  for (int n = std::max(lo, 3); n <= hi; ++n) {
    const Graph kn = complete_graph(n);
    const PredictedSpectrum pred = circle_spectrum_closed_form(n);
    auto check = [&](const std::string& kind, json instance, const CirclePlacement& c) {
      instance["kind"] = kind;
      instance["n"] = n;
      VerifyEntry e = spectrum_entry("circle-spectrum", instance, pred, stiffness(kn, c.placement));
      const double zhu = zhu_identity_residual(c.placement);
      e.computed["zhu_residual"] = zhu;
      e.pass = e.pass && zhu <= kResidualTol && c.injective && c.centered;
      if (!e.pass) e.instance["placement"] = placement_to_json(c.placement);
      out.push_back(std::move(e));
    };
    check("roots-of-unity", json::object(), unit_circle_placement(roots_of_unity_angles(n)));
    for (int s = 0; s < samples; ++s) {
      Rng rng = make_stream(o.seed, "verify-circle", static_cast<std::uint64_t>(n) * 1000 + s);
      const auto angles = random_centered_angles(n, rng);
      check("random-antipodal", {{"seed", o.seed}, {"sample", s}}, unit_circle_placement(angles));
    }
  }
}

void suite_interlacing(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  const auto [nlo, nhi] = o.grid.range("n", {4, 10});
  const auto [dlo, dhi] = o.grid.range("d", {2, 4});
  const int samples = samples_or(o, 200);
  std::vector<VerifyEntry> entries(static_cast<std::size_t>(samples));
  parallel_for(entries.size(), o.threads, [&](std::size_t s) {
    Rng rng = make_stream(o.seed, "verify-interlacing", s);
    const int n = std::uniform_int_distribution<int>(std::max(nlo, 2), nhi)(rng);
    const int d = std::uniform_int_distribution<int>(std::max(dlo, 1), dhi)(rng);
    const double keep = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    if (edges.empty()) edges.emplace_back(0, 1);
    const Graph g(n, edges);
    const Edge e = g.edge(std::uniform_int_distribution<std::size_t>(0, g.num_edges() - 1)(rng));
    const Placement p = random_gaussian_placement(n, d, o.seed, s);
    const InterlacingReport rep = interlacing_check(g, e, p, 1e-9);
    VerifyEntry& entry = entries[s];
    entry.theorem = "edge-removal-interlacing";
    entry.instance = {{"seed", o.seed}, {"sample", s}, {"n", n}, {"d", d},
                      {"edges", g.num_edges()}, {"removed", {e.u, e.v}}};
    entry.predicted = "lambda_{i-1} <= lambda'_i <= lambda_i";
    entry.computed = {{"max_violation", rep.max_violation}};
    entry.max_value_error = std::max(0.0, rep.max_violation);
    entry.pass = rep.holds;
    if (!entry.pass) {
      std::ostringstream es;
      write_edge_list(es, g);
      entry.instance["graph"] = es.str();
      entry.instance["placement"] = placement_to_json(p);
    }
  });
  for (auto& e : entries) out.push_back(std::move(e));
}

void suite_kyfan(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  const auto [nlo, nhi] = o.grid.range("n", {3, 20});
  const auto [dlo, dhi] = o.grid.range("d", {2, 4});
  for (int n = std::max(nlo, 3); n <= nhi; ++n) {
    const Matrix p = kyfan_projection(n);
    double err = (p * p - p).cwiseAbs().maxCoeff();
    err = std::max(err, (p - p.transpose()).cwiseAbs().maxCoeff());
    for (int i = 0; i < n; ++i) {
      const Vector v = star_vector(n, i);
      err = std::max(err, (p * v - v).cwiseAbs().maxCoeff());
    }
    const int rank = numeric_rank(p);
    VerifyEntry e = scalar_entry("kyfan-projection", {{"n", n}}, 0.0, err, err, 1e-12);
    e.computed = {{"projection_error", err}, {"rank", rank}};
    e.predicted = {{"projection_error", 0.0}, {"rank", n}};
    e.multiplicity_match = rank == n;
    e.pass = e.pass && e.multiplicity_match;
    out.push_back(std::move(e));
  }

  {
    const Placement tri = regular_simplex(2);
    const EigensumBound b = top_n_eigensum_bound_check(tri);
    out.push_back(scalar_entry("top-n-eigensum-equality", {{"placement", "equilateral K_3"}}, 6.0,
                               b.sum, std::abs(b.sum - 6.0) + std::abs(b.bound - 6.0), kValueTol));
  }

  const int samples = samples_or(o, 500);
  const int top = std::min(nhi, 10);
  std::vector<VerifyEntry> entries(static_cast<std::size_t>(samples));
  parallel_for(entries.size(), o.threads, [&](std::size_t s) {
    Rng rng = make_stream(o.seed, "verify-kyfan", s);
    const int n = std::uniform_int_distribution<int>(std::max(nlo, 3), std::max(top, 3))(rng);
    const int d = std::uniform_int_distribution<int>(std::max(dlo, 1), dhi)(rng);
    const Placement p = random_gaussian_placement(n, d, o.seed, s);
    const EigensumBound b = top_n_eigensum_bound_check(p);
    VerifyEntry& e = entries[s];
    e.theorem = "top-n-eigensum-bound";
    e.instance = {{"seed", o.seed}, {"sample", s}, {"n", n}, {"d", d}};
    e.predicted = {{"bound", b.bound}};
    e.computed = {{"sum", b.sum}, {"margin", b.margin}};
    e.max_value_error = std::max(0.0, -b.margin);
    e.pass = b.margin >= -kValueTol;
    if (!e.pass) e.instance["placement"] = placement_to_json(p);
  });
  for (auto& e : entries) out.push_back(std::move(e));
}

VerifyEntry family_entry(std::string theorem, json instance, const Matrix& lower,
                         const std::vector<Vector>& vecs, double lambda, int expected_rank) {
  double worst = 0.0;
  Matrix stacked(lower.rows(), static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    worst = std::max(worst, eigen_residual(lower, vecs[i], lambda));
    stacked.col(static_cast<Eigen::Index>(i)) = vecs[i];
  }
  const int rank = vecs.empty() ? 0 : numeric_rank(stacked);
  VerifyEntry e;
  e.theorem = std::move(theorem);
  e.instance = std::move(instance);
  e.predicted = {{"eigenvalue", lambda}, {"rank", expected_rank}};
  e.computed = {{"vectors", vecs.size()}, {"max_residual", worst}, {"rank", rank}};
  e.max_value_error = worst;
  e.multiplicity_match = rank == expected_rank;
  e.pass = worst <= kResidualTol && e.multiplicity_match;
  return e;
}

void suite_families(const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  const auto [nlo, nhi] = o.grid.range("n", {4, 24});
  const auto [dlo, dhi] = o.grid.range("d", {2, 5});
  for (int d = std::max(dlo, 2); d <= dhi; ++d) {
    for (int n = std::max(nlo, d + 1); n <= nhi; ++n) {
      if (n % (d + 1) != 0) continue;
      const auto fam = turan_simplex_families(n, d);
      const Matrix lower = lower_stiffness_direct(fam.graph, fam.placement);
      const json inst = {{"n", n}, {"d", d}};
      if (d >= 3) {
        out.push_back(family_entry("turan-simplex-phi", inst, lower, fam.phi, fam.phi_eigenvalue,
                                   (d - 2) * (d + 1) / 2));
      }
      out.push_back(family_entry("turan-simplex-psi", inst, lower, fam.psi, fam.psi_eigenvalue,
                                 (n - d - 1) * (d - 1)));
    }
  }
  for (int d = std::max(dlo, 2); d <= std::min(dhi, 4); ++d) {
    for (int n = std::max(nlo, 2 * d); n <= nhi; ++n) {
      if (n % (2 * d) != 0) continue;
      const auto fam = crosspolytope_families(n, d);
      const Matrix lower = lower_stiffness_direct(fam.graph, fam.placement);
      const json inst = {{"n", n}, {"d", d}};
      out.push_back(family_entry("crosspolytope-phi", inst, lower, fam.phi, fam.phi_eigenvalue,
                                 d * (d - 1) / 2));
      std::vector<Vector> half = fam.big_psi;
      half.insert(half.end(), fam.f.begin(), fam.f.end());
      out.push_back(family_entry("crosspolytope-psi-f", inst, lower, half, fam.half_eigenvalue,
                                 n * (d - 1) - d * d));
    }
  }

  const int samples = samples_or(o, 20);
  const auto [dl, dh] = std::pair{std::max(dlo, 2), std::min(dhi, 4)};
  for (int d = dl; d <= dh; ++d) {
    for (int n = std::max(nlo, 4); n <= std::min(nhi, 12); ++n) {
      const std::uint64_t stream = static_cast<std::uint64_t>(n) * 16 + d;
      const Graph kn = complete_graph(n);
      if (n % 2 == 0) {
        const Placement p = random_sphere_placement(n, d, o.seed, true, stream);
        const Matrix lower = lower_stiffness_direct(kn, p);
        Rng rng = make_stream(o.seed, "verify-phi-f", stream);
        std::normal_distribution<double> normal(0.0, 1.0);
        std::vector<Vector> vecs;
        for (int s = 0; s < samples; ++s) {
          std::vector<double> f(static_cast<std::size_t>(n));
          for (double& x : f) x = normal(rng);
          const double mean = std::accumulate(f.begin(), f.end(), 0.0) / n;
          for (double& x : f) x -= mean;
          vecs.push_back(phi_f_vector(p, f));
        }
        VerifyEntry e = family_entry("phi-f", {{"n", n}, {"d", d}, {"seed", o.seed}}, lower, vecs,
                                     n / 2.0, std::min(samples, n - 1));
        if (!e.pass) e.instance["placement"] = placement_to_json(p);
        out.push_back(std::move(e));
      }
      const Placement q = random_gaussian_placement(n, d, o.seed, stream);
      VerifyEntry e = family_entry("edge-length", {{"n", n}, {"d", d}, {"seed", o.seed}},
                                   lower_stiffness_direct(kn, q), {edge_length_eigenvector(q)},
                                   static_cast<double>(n), 1);
      if (!e.pass) e.instance["placement"] = placement_to_json(q);
      out.push_back(std::move(e));
    }
  }
}

void run_suite(const std::string& suite, const VerifyOptions& o, std::vector<VerifyEntry>& out) {
  if (suite == "simplex") return suite_simplex(o, out);
  if (suite == "turan") return suite_turan(o, out);
  if (suite == "cross") return suite_cross(o, out);
  if (suite == "tetra") return suite_tetra(o, out);
  if (suite == "circle") return suite_circle(o, out);
  if (suite == "interlacing") return suite_interlacing(o, out);
  if (suite == "kyfan") return suite_kyfan(o, out);
  if (suite == "families") return suite_families(o, out);
  throw std::invalid_argument("verify: unknown suite \"" + suite + "\"");
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  if (suite != "all" &&
      std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end()) {
    throw std::invalid_argument("verify: unknown suite \"" + suite + "\"");
  }
  require_keys(options.grid, {"n", "d"}, suite);
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r;
  r.suite = suite;
  if (suite == "all") {
    for (const auto& s : verify_suites()) run_suite(s, options, r.entries);
  } else {
    run_suite(suite, options, r.entries);
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json verify_report_to_json(const VerifyReport& r, bool failures_only) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    if (failures_only && e.pass) continue;
    entries.push_back({{"theorem", e.theorem},
                       {"instance", e.instance},
                       {"predicted", e.predicted},
                       {"computed", e.computed},
                       {"max_value_error", e.max_value_error},
                       {"multiplicity_match", e.multiplicity_match},
                       {"pass", e.pass}});
  }
  return {{"suite", r.suite},
          {"pass", r.pass()},
          {"instances", r.entries.size()},
          {"failures", r.failures()},
          {"worst_error", r.worst_error()},
          {"wall_seconds", r.wall_seconds},
          {"entries", std::move(entries)}};
}

}  // namespace rigidspec
