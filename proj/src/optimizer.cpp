#include "rigidspec/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rigidspec/canonical.hpp"
#include "rigidspec/parallel.hpp"
#include "rigidspec/random.hpp"
#include "rigidspec/spectral.hpp"

namespace rigidspec {

void OptimizerConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("optimizer: restarts must be positive");
  if (max_iters < 1) throw std::invalid_argument("optimizer: max_iters must be positive");
  if (!(initial_step > 0)) throw std::invalid_argument("optimizer: initial_step must be > 0");
  if (!(decay > 0 && decay <= 1)) throw std::invalid_argument("optimizer: decay must lie in (0,1]");
  if (!(smoothing_width >= 0)) throw std::invalid_argument("optimizer: smoothing_width must be >= 0");
  if (!(fd_step > 0)) throw std::invalid_argument("optimizer: fd_step must be > 0");
  if (!(jitter >= 0)) throw std::invalid_argument("optimizer: jitter must be >= 0");
  if (patience < 1) throw std::invalid_argument("optimizer: patience must be positive");
  if (threads < 1) throw std::invalid_argument("optimizer: threads must be positive");
}

std::string gauge_name(Gauge g) {
  return g == Gauge::CenterUnitScale ? "center-unit-scale" : "unit-sphere";
}

Gauge parse_gauge(const std::string& s) {
  if (s == "center-unit-scale") return Gauge::CenterUnitScale;
  if (s == "unit-sphere") return Gauge::UnitSphere;
  throw std::invalid_argument("unknown gauge \"" + s + "\"");
}

Placement normalize_placement(const Placement& p, Gauge gauge) {
  if (p.image_size() < 2) throw std::invalid_argument("normalize_placement: p is constant");
  Matrix c = p.coords();
  Vector centroid = c.rowwise().mean();
  c.colwise() -= centroid;
  if (gauge == Gauge::CenterUnitScale) {
    const double rms = std::sqrt(c.colwise().squaredNorm().mean());
    c /= rms;
  } else {
    for (Eigen::Index i = 0; i < c.cols(); ++i) {
      const double r = c.col(i).norm();
      if (r > 0) c.col(i) /= r;
    }
  }
  return Placement(std::move(c));
}

namespace {

Placement jittered(const Placement& p, double amount, std::uint64_t seed, std::uint64_t index) {
  Rng rng = make_stream(seed, "restart-jitter", index);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix c = p.coords();
  for (Eigen::Index i = 0; i < c.size(); ++i) c.data()[i] += amount * normal(rng);
  return Placement(std::move(c));
}

double gauge_scale(const Placement& p) {
  Matrix c = p.coords();
  c.colwise() -= c.rowwise().mean();
  const double rms = std::sqrt(c.colwise().squaredNorm().mean());
  return rms > 0 ? rms : 1.0;
}

// sum over edges at v of ((d_e . (w_a - w_b)))^2 with p(v) replaced by `pv`.
double star_quadratic(const Graph& g, const Placement& p, int v, const Vector& pv,
                      const Vector& w) {
  const int d = p.dim();
  double acc = 0.0;
  for (std::size_t k : g.incident(v)) {
    const Edge& e = g.edge(k);
    const int other = e.u == v ? e.v : e.u;
    Vector diff = pv - p.point(other);
    if (e.u != v) diff = -diff;  // direction points from p(e.v) to p(e.u)
    const double len = diff.norm();
    if (len == 0.0) continue;
    const double proj = diff.dot(w.segment(static_cast<Eigen::Index>(e.u) * d, d) -
                                 w.segment(static_cast<Eigen::Index>(e.v) * d, d)) /
                        len;
    acc += proj * proj;
  }
  return acc;
}

}  // namespace

SmoothedGap smoothed_gap(const Graph& g, const Placement& p, double smoothing_width,
                         double fd_step) {
  check_compatible(g, p);
  const int d = p.dim();
  const int n = p.size();
  if (n <= d) throw std::invalid_argument("smoothed_gap: requires n > d");
  const auto k0 = static_cast<Eigen::Index>(trivial_motion_count(d));
  EigenDecomposition eig = symmetric_eigen(stiffness(g, p));

  SmoothedGap out;
  out.gap = eig.values(k0);
  const double window = smoothing_width * std::abs(out.gap);
  Eigen::Index last = k0;
  while (last + 1 < eig.values.size() && eig.values(last + 1) - out.gap <= window) ++last;
  out.cluster_size = static_cast<int>(last - k0 + 1);

  std::vector<double> weight(static_cast<std::size_t>(out.cluster_size), 1.0);
  if (out.cluster_size > 1 && window > 0) {
    double z = 0.0;
    for (int i = 0; i < out.cluster_size; ++i) {
      weight[i] = std::exp(-(eig.values(k0 + i) - out.gap) / window);
      z += weight[i];
    }
    for (double& x : weight) x /= z;
    out.value = out.gap - window * std::log(z);
  } else {
    for (double& x : weight) x = 1.0 / out.cluster_size;
    out.value = out.gap;
  }

  const double h = fd_step * gauge_scale(p);
  out.gradient = Vector::Zero(static_cast<Eigen::Index>(d) * n);
  for (int i = 0; i < out.cluster_size; ++i) {
    const Vector w = eig.vectors.col(k0 + i);
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < d; ++c) {
        Vector plus = p.point(v), minus = p.point(v);
        plus(c) += h;
        minus(c) -= h;
        const double diff = star_quadratic(g, p, v, plus, w) - star_quadratic(g, p, v, minus, w);
        out.gradient(static_cast<Eigen::Index>(v) * d + c) += weight[i] * diff / (2.0 * h);
      }
    }
  }
  return out;
}

std::vector<RestartSeed> seeded_restarts(const Graph& g, int d, const OptimizerConfig& config) {
  const int n = g.num_vertices();
  std::vector<RestartSeed> canonical;
  if (n == d + 1) canonical.push_back({"simplex", regular_simplex(d)});
  if (d == 3 && n == 4) {
    canonical.push_back({"tetrahedron-h(1/sqrt6)", tetrahedron_h(1.0 / std::sqrt(6.0))});
    canonical.push_back({"tetrahedron-h(1)", tetrahedron_h(1.0)});
  }
  if (d >= 2 && n % (2 * d) == 0) canonical.push_back({"crosspolytope", crosspolytope_placement(n, d)});
  if (n % (d + 1) == 0 && n > d + 1) {
    canonical.push_back({"turan-simplex", turan_simplex_placement(n, d)});
  }
  if (d == 2 && n >= 3) {
    auto angles = roots_of_unity_angles(n);
    canonical.push_back({"roots-of-unity", unit_circle_placement(angles).placement});
  }

  std::vector<RestartSeed> out;
  for (int r = 0; r < config.restarts; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    if (idx < canonical.size()) {
      out.push_back({canonical[idx].label + "+jitter",
                     jittered(canonical[idx].placement, config.jitter, config.seed, idx)});
    } else {
      out.push_back({"sphere", random_sphere_placement(n, d, config.seed, false, idx)});
    }
  }
  return out;
}

namespace {

struct RestartOutcome {
  RestartTrace trace;
  Placement best;
};

RestartOutcome run_restart(const Graph& g, const RestartSeed& seed, const OptimizerConfig& cfg) {
  RestartOutcome out;
  out.trace.start = seed.label;
  Placement p = normalize_placement(seed.placement, cfg.gauge);
  SmoothedGap cur = smoothed_gap(g, p, cfg.smoothing_width, cfg.fd_step);
  double best = cur.gap;
  out.best = p;
  out.trace.points.push_back({0, best});
  std::vector<double> history{best};
  double step = cfg.initial_step;

  int it = 1;
  for (; it <= cfg.max_iters; ++it) {
    const double gnorm = cur.gradient.norm();
    if (!(gnorm > 0) || step < 1e-12) break;
    Matrix moved = p.coords();
    Eigen::Map<Vector>(moved.data(), moved.size()) += (step / gnorm) * cur.gradient;
    Placement cand = normalize_placement(Placement(std::move(moved)), cfg.gauge);
    SmoothedGap next = smoothed_gap(g, cand, cfg.smoothing_width, cfg.fd_step);
    if (next.gap > cur.gap) {
      p = std::move(cand);
      cur = std::move(next);
      step = std::min(cfg.initial_step, step / std::sqrt(cfg.decay));
    } else {
      step *= cfg.decay;
    }
    if (cur.gap > best) {
      best = cur.gap;
      out.best = p;
      out.trace.points.push_back({it, best});
    }
    history.push_back(best);
    if (it >= cfg.patience &&
        best - history[static_cast<std::size_t>(it - cfg.patience)] < cfg.tol) {
      break;
    }
  }
  out.trace.iterations = std::min(it, cfg.max_iters);
  out.trace.best_gap = best;
  return out;
}

}  // namespace

OptimizeResult gap_ascent(const Graph& g, int d, const OptimizerConfig& config) {
  config.validate();
  if (g.num_vertices() <= d) {
    throw std::invalid_argument("gap_ascent: requires n > d (n=" + std::to_string(g.num_vertices()) +
                                ", d=" + std::to_string(d) + ")");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto seeds = seeded_restarts(g, d, config);
  std::vector<RestartOutcome> outcomes(seeds.size());

  parallel_for(seeds.size(), config.threads,
               [&](std::size_t r) { outcomes[r] = run_restart(g, seeds[r], config); });

  OptimizeResult res;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    if (res.best_restart < 0 || outcomes[r].trace.best_gap > res.best_gap) {
      res.best_gap = outcomes[r].trace.best_gap;
      res.best_restart = static_cast<int>(r);
    }
  }
  res.best_placement = outcomes[static_cast<std::size_t>(res.best_restart)].best;
  res.best_gap = spectral_gap(g, res.best_placement);
  for (auto& o : outcomes) res.traces.push_back(std::move(o.trace));
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

nlohmann::json config_to_json(const OptimizerConfig& c) {
  return {{"restarts", c.restarts},       {"max_iters", c.max_iters},
          {"initial_step", c.initial_step}, {"decay", c.decay},
          {"seed", c.seed},               {"gauge", gauge_name(c.gauge)},
          {"smoothing_width", c.smoothing_width}, {"tol", c.tol},
          {"patience", c.patience},       {"fd_step", c.fd_step},
          {"jitter", c.jitter},           {"threads", c.threads}};
}

nlohmann::json optimize_result_to_json(const OptimizeResult& r, bool include_traces) {
  nlohmann::json j = {{"best_gap", r.best_gap},
                      {"best_restart", r.best_restart},
                      {"best_placement", placement_to_json(r.best_placement)},
                      {"wall_seconds", r.wall_seconds}};
  if (include_traces) {
    nlohmann::json traces = nlohmann::json::array();
    for (const auto& t : r.traces) {
      nlohmann::json pts = nlohmann::json::array();
      for (const auto& pt : t.points) pts.push_back({pt.iteration, pt.gap});
      traces.push_back({{"start", t.start},
                        {"best_gap", t.best_gap},
                        {"iterations", t.iterations},
                        {"trace", std::move(pts)}});
    }
    j["restarts"] = std::move(traces);
  }
  return j;
}

}  // namespace rigidspec
