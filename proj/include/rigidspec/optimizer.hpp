#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigidspec/framework.hpp"
#include "rigidspec/graph.hpp"

namespace rigidspec {

enum class Gauge {
  CenterUnitScale,  // centroid 0, root-mean-square point norm 1
  UnitSphere,       // centroid 0, every point projected to the unit sphere
};

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 400;
  double initial_step = 0.05;
  double decay = 0.7;
  std::uint64_t seed = 1;
  Gauge gauge = Gauge::CenterUnitScale;
  /// Softmin window, relative to the current gap.
  double smoothing_width = 1e-6;
  /// Stop once the best gap gains less than `tol` over `patience` iterations.
  double tol = 1e-8;
  int patience = 50;
  /// Central finite-difference step, relative to the gauge scale.
  double fd_step = 1e-5;
  /// Jitter added to canonical starts.
  double jitter = 1e-3;
  int threads = 1;

  /// Throws std::invalid_argument on non-positive counts or steps.
  void validate() const;
};

struct TracePoint {
  int iteration = 0;
  double gap = 0.0;
};

struct RestartTrace {
  std::string start;
  std::vector<TracePoint> points;  // best-so-far gap, nondecreasing
  double best_gap = 0.0;
  int iterations = 0;
};

struct OptimizeResult {
  double best_gap = 0.0;
  Placement best_placement;
  int best_restart = -1;
  std::vector<RestartTrace> traces;
  double wall_seconds = 0.0;
};

struct RestartSeed {
  std::string label;
  Placement placement;
};

/// Centers p and fixes scale per `gauge`. Throws when p is constant.
Placement normalize_placement(const Placement& p, Gauge gauge);

/// config.restarts starting placements: jittered canonical placements when
/// the graph size permits, then uniform random sphere placements.
std::vector<RestartSeed> seeded_restarts(const Graph& g, int d, const OptimizerConfig& config);

/// Softmin of the eigenvalues in the cluster at position C(d+1,2)+1.
struct SmoothedGap {
  double gap = 0.0;       // the raw (C(d+1,2)+1)-th eigenvalue
  double value = 0.0;     // softmin over the cluster
  Vector gradient;        // d/dp of `value`, vertex-major flattened
  int cluster_size = 0;
};

/// First-order eigenvalue perturbation w^t (dL/dp) w, with dL/dp taken by
/// central differences of step `fd_step` on each coordinate.
SmoothedGap smoothed_gap(const Graph& g, const Placement& p, double smoothing_width,
                         double fd_step);

/// Multi-restart ascent on the smoothed spectral gap; best-ever tracking.
/// Throws when n <= d.
OptimizeResult gap_ascent(const Graph& g, int d, const OptimizerConfig& config);

nlohmann::json config_to_json(const OptimizerConfig& c);
nlohmann::json optimize_result_to_json(const OptimizeResult& r, bool include_traces = true);

std::string gauge_name(Gauge g);
Gauge parse_gauge(const std::string& s);

}  // namespace rigidspec
