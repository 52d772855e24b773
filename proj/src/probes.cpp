#include "rigidspec/probes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rigidspec/canonical.hpp"
#include "rigidspec/optimizer.hpp"
#include "rigidspec/parallel.hpp"
#include "rigidspec/random.hpp"
#include "rigidspec/results.hpp"
#include "rigidspec/spectral.hpp"

namespace rigidspec {

using nlohmann::json;

const std::vector<std::string>& probe_tags() {
  static const std::vector<std::string> tags = {"spherical-second-eig", "top-n-sum", "kn-upper",
                                                "regular-2d", "repeated-points"};
  return tags;
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed, std::uint64_t stream) {
  if (degree < 1 || n <= degree || (static_cast<long>(n) * degree) % 2 != 0) {
    throw std::invalid_argument("random_regular_graph: need n > degree and n*degree even (n=" +
                                std::to_string(n) + ", degree=" + std::to_string(degree) + ")");
  }
  Rng rng = make_stream(seed, "random_regular_graph", stream);
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < degree; ++j) stubs.push_back(v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      if (stubs[i] == stubs[i + 1]) ok = false;
      else edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
  throw std::runtime_error("random_regular_graph: pairing rejected too often");
}

namespace {

std::pair<int, int> or_default(std::pair<int, int> r, std::pair<int, int> fallback) {
  return r.first == 0 && r.second == 0 ? fallback : r;
}

struct Tally {
  double min_margin = std::numeric_limits<double>::infinity();
  double max_margin = -std::numeric_limits<double>::infinity();
  void add(double m) {
    min_margin = std::min(min_margin, m);
    max_margin = std::max(max_margin, m);
  }
};

json finish(const std::string& tag, json params, json instances, const Tally& t, json candidates,
            std::string margin_meaning, double seconds) {
  return {{"tag", tag},
          {"params", std::move(params)},
          {"margin", std::move(margin_meaning)},
          {"instances", std::move(instances)},
          {"min_margin", std::isfinite(t.min_margin) ? json(t.min_margin) : json(nullptr)},
          {"max_margin", std::isfinite(t.max_margin) ? json(t.max_margin) : json(nullptr)},
          {"counterexample_candidates", std::move(candidates)},
          {"wall_seconds", seconds}};
}

OptimizerConfig probe_config(const ProbeParams& p, int default_restarts) {
  OptimizerConfig c;
  c.restarts = p.restarts > 0 ? p.restarts : default_restarts;
  if (p.max_iters > 0) c.max_iters = p.max_iters;
  c.seed = p.seed;
  c.threads = p.threads;
  return c;
}

json spherical_second_eig(const ProbeParams& p, const auto t0) {
  const auto [nlo, nhi] = or_default(p.n, {8, 8});
  const auto [dlo, dhi] = or_default(p.d, {3, 3});
  const int samples = p.samples >= 0 ? p.samples : 50;
  json instances = json::array(), candidates = json::array();
  Tally tally;
  for (int n = std::max(nlo, 4); n <= nhi; ++n) {
    if (n % 2 != 0) continue;
    for (int d = std::max(dlo, 2); d <= dhi; ++d) {
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t stream = (static_cast<std::uint64_t>(n) * 64 + d) * 100000 + s;
        const Placement q = random_sphere_placement(n, d, p.seed, true, stream);
        const MultiplicitySpectrum spec = clustered_spectrum(stiffness(complete_graph(n), q));
        const double half = n / 2.0;
        int half_mult = 0;
        for (const auto& c : spec.clusters)
          if (std::abs(c.value - half) <= 1e-9 * n) half_mult = c.multiplicity;
        const Cluster second =
            spec.clusters.size() >= 2 ? spec.clusters[spec.clusters.size() - 2] : Cluster{};
        const double margin = half - second.value;
        tally.add(margin);
        json inst = {{"n", n},
                     {"d", d},
                     {"sample", s},
                     {"stream", stream},
                     {"second_value", second.value},
                     {"second_multiplicity", second.multiplicity},
                     {"half_multiplicity", half_mult},
                     {"floor_holds", half_mult >= n - 1},
                     {"margin", margin}};
        const bool candidate = std::abs(margin) > 1e-9 * n || second.multiplicity != n - 1;
        if (candidate) {
          json c = inst;
          c["placement"] = placement_to_json(q);
          candidates.push_back(std::move(c));
        }
        instances.push_back(std::move(inst));
      }
    }
  }
  return finish("spherical-second-eig",
                {{"n", {nlo, nhi}}, {"d", {dlo, dhi}}, {"samples", samples}, {"seed", p.seed}},
                std::move(instances), tally, std::move(candidates),
                "n/2 - second largest cluster value; predicted (n/2, n-1)",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

json top_n_sum(const ProbeParams& p, const auto t0) {
  const auto [nlo, nhi] = or_default(p.n, {3, 10});
  const auto [dlo, dhi] = or_default(p.d, {2, 4});
  const int samples = p.samples >= 0 ? p.samples : 200;
  json instances = json::array(), candidates = json::array();
  Tally tally;
  double proved_min = std::numeric_limits<double>::infinity();
  for (int n = std::max(nlo, 2); n <= nhi; ++n) {
    for (int d = std::max(dlo, 1); d <= dhi; ++d) {
      json row_min = nullptr;
      double worst = std::numeric_limits<double>::infinity(), worst_proved = worst;
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t stream = (static_cast<std::uint64_t>(n) * 64 + d) * 100000 + s;
        // Alternate Gaussian and spherical samples.
        const Placement q = s % 2 == 0 ? random_gaussian_placement(n, d, p.seed, stream)
                                       : random_sphere_placement(n, d, p.seed, false, stream);
        const EigensumBound b = top_n_eigensum_bound_check(q);
        const double conj = n * (n + 1) / 2.0;
        const double margin = b.sum - conj;
        tally.add(margin);
        worst_proved = std::min(worst_proved, b.margin);
        if (margin < worst) {
          worst = margin;
          row_min = {{"sample", s}, {"stream", stream}, {"sum", b.sum}};
        }
        if (margin < -1e-9) {
          candidates.push_back({{"n", n}, {"d", d}, {"sample", s}, {"stream", stream},
                                {"sum", b.sum}, {"margin", margin},
                                {"placement", placement_to_json(q)}});
        }
      }
      proved_min = std::min(proved_min, worst_proved);
      instances.push_back({{"n", n},
                           {"d", d},
                           {"samples", samples},
                           {"conjectured_bound", n * (n + 1) / 2.0},
                           {"proved_bound", n * n / 3.0 + n},
                           {"min_margin", samples ? json(worst) : json(nullptr)},
                           {"min_proved_margin", samples ? json(worst_proved) : json(nullptr)},
                           {"argmin", row_min}});
    }
  }
  json rec = finish("top-n-sum",
                    {{"n", {nlo, nhi}}, {"d", {dlo, dhi}}, {"samples", samples}, {"seed", p.seed}},
                    std::move(instances), tally, std::move(candidates),
                    "sum of n largest eigenvalues - n(n+1)/2",
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  const EigensumBound eq = top_n_eigensum_bound_check(regular_simplex(2));
  rec["equilateral_k3"] = {{"sum", eq.sum}, {"margin", eq.sum - 6.0}};
  rec["min_proved_margin"] = std::isfinite(proved_min) ? json(proved_min) : json(nullptr);
  return rec;
}

json kn_upper(const ProbeParams& p, const auto t0) {
  const auto [nlo, nhi] = or_default(p.n, {12, 12});
  const auto [dlo, dhi] = or_default(p.d, {3, 3});
  const OptimizerConfig cfg = probe_config(p, 16);
  json instances = json::array(), candidates = json::array();
  Tally tally;
  for (int d = std::max(dlo, 1); d <= dhi; ++d) {
    for (int n = std::max(nlo, 2 * d); n <= nhi; ++n) {
      const OptimizeResult r = gap_ascent(complete_graph(n), d, cfg);
      const double target = n / (2.0 * d);
      const double margin = target - r.best_gap;
      tally.add(margin);
      json inst = {{"n", n}, {"d", d}, {"best_gap", r.best_gap}, {"n_over_2d", target},
                   {"margin", margin}, {"best_restart", r.best_restart}};
      if (margin < -1e-9) {
        json c = inst;
        c["config"] = config_to_json(cfg);
        c["placement"] = placement_to_json(r.best_placement);
        candidates.push_back(std::move(c));
      }
      instances.push_back(std::move(inst));
    }
  }
  return finish("kn-upper",
                {{"n", {nlo, nhi}}, {"d", {dlo, dhi}}, {"config", config_to_json(cfg)}},
                std::move(instances), tally, std::move(candidates),
                "n/(2d) - best gap found (optimizer output is a lower bound on a_d)",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

json regular_2d(const ProbeParams& p, const auto t0) {
  const auto [nlo, nhi] = or_default(p.n, {8, 16});
  const auto [dlo, dhi] = or_default(p.d, {2, 2});
  const int samples = p.samples >= 0 ? p.samples : 3;
  const OptimizerConfig cfg = probe_config(p, 4);
  json instances = json::array(), candidates = json::array();
  Tally tally;
  for (int d = std::max(dlo, 1); d <= dhi; ++d) {
    for (int n = std::max(nlo, 2 * d + 1); n <= nhi; ++n) {
      double best = 0.0;
      json best_graph = nullptr;
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t stream = static_cast<std::uint64_t>(n) * 1000 + s;
        const Graph g = random_regular_graph(n, 2 * d, p.seed, stream);
        const OptimizeResult r = gap_ascent(g, d, cfg);
        if (best_graph.is_null() || r.best_gap > best) {
          best = r.best_gap;
          best_graph = {{"sample", s}, {"stream", stream}};
        }
      }
      tally.add(best);
      instances.push_back({{"n", n}, {"d", d}, {"graphs", samples}, {"max_best_gap", best},
                           {"argmax", best_graph}, {"margin", best}});
    }
  }
  return finish("regular-2d",
                {{"n", {nlo, nhi}}, {"d", {dlo, dhi}}, {"samples", samples}, {"seed", p.seed},
                 {"config", config_to_json(cfg)}},
                std::move(instances), tally, std::move(candidates),
                "max over sampled 2d-regular graphs of the best gap found (trend in n)",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

json repeated_points(const ProbeParams& p, const auto t0) {
  const auto [nlo, nhi] = or_default(p.n, {4, 4});
  const auto [dlo, dhi] = or_default(p.d, {3, 3});
  const auto [klo, khi] = or_default(p.k, {2, 4});
  const int samples = p.samples >= 0 ? p.samples : 1;
  json instances = json::array(), candidates = json::array();
  Tally tally;
  for (int n = std::max(nlo, 2); n <= nhi; ++n) {
    for (int d = std::max(dlo, 1); d <= dhi; ++d) {
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t stream = (static_cast<std::uint64_t>(n) * 64 + d) * 1000 + s;
        const Placement base = random_gaussian_placement(n, d, p.base_seed, stream);
        const double two = spectral_gap(complete_graph(2 * n), replicate_placement(base, 2));
        for (int k = std::max(klo, 2); k <= khi; ++k) {
          const double lhs = spectral_gap(complete_graph(k * n), replicate_placement(base, k));
          const double rhs = k / 2.0 * two;
          const double margin = lhs - rhs;
          tally.add(margin);
          json inst = {{"n", n},     {"d", d},     {"k", k},     {"sample", s},
                       {"lhs", lhs}, {"rhs", rhs}, {"ratio", rhs != 0 ? json(lhs / rhs) : json(nullptr)},
                       {"margin", margin}};
          if (std::abs(margin) > 1e-9 * std::max(1.0, std::abs(rhs))) {
            json c = inst;
            c["base_placement"] = placement_to_json(base);
            candidates.push_back(std::move(c));
          }
          instances.push_back(std::move(inst));
        }
      }
    }
  }
  return finish("repeated-points",
                {{"n", {nlo, nhi}}, {"d", {dlo, dhi}}, {"k", {klo, khi}}, {"samples", samples},
                 {"base_seed", p.base_seed}},
                std::move(instances), tally, std::move(candidates),
                "lambda(K_kn, p^k) - (k/2) lambda(K_2n, p^2)",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace

json conjecture_probe(const std::string& tag, const ProbeParams& params) {
  const auto t0 = std::chrono::steady_clock::now();
  if (tag == "spherical-second-eig") return spherical_second_eig(params, t0);
  if (tag == "top-n-sum") return top_n_sum(params, t0);
  if (tag == "kn-upper") return kn_upper(params, t0);
  if (tag == "regular-2d") return regular_2d(params, t0);
  if (tag == "repeated-points") return repeated_points(params, t0);
  throw std::invalid_argument("conjecture: unknown tag \"" + tag + "\"");
}

}  // namespace rigidspec
