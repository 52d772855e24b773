#include "rigidspec/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rigidspec/canonical.hpp"
#include "rigidspec/optimizer.hpp"
#include "rigidspec/probes.hpp"
#include "rigidspec/results.hpp"
#include "rigidspec/spectral.hpp"
#include "rigidspec/verify.hpp"

namespace rigidspec {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

int to_int(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(field + ": expected an integer, got \"" + s + "\"");
}

double to_double(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(field + ": expected a number, got \"" + s + "\"");
}

std::uint64_t to_u64(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size() && s.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(field + ": expected a non-negative integer, got \"" + s + "\"");
}

std::pair<std::string, std::vector<std::string>> split_spec(const std::string& spec,
                                                            const std::string& field) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(field + ": expected kind:args, got \"" + spec + "\"");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "file") return {kind, {rest}};
  return {kind, split(rest, ',')};
}

void expect_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi,
                 const std::string& field) {
  if (args.size() < lo || args.size() > hi) {
    throw std::invalid_argument(field + ": wrong number of arguments");
  }
}

std::ifstream open_input(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(field + ": cannot open \"" + path + "\"");
  return in;
}

}  // namespace

std::pair<int, int> parse_int_range(const std::string& text, const std::string& field) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text, field);
    return {v, v};
  }
  const int lo = to_int(text.substr(0, dots), field);
  const int hi = to_int(text.substr(dots + 2), field);
  if (lo > hi) throw std::invalid_argument(field + ": empty range \"" + text + "\"");
  return {lo, hi};
}

Graph parse_graph_spec(const std::string& spec) {
  const std::string field = "--graph";
  auto [kind, args] = split_spec(spec, field);
  if (kind == "complete") {
    expect_args(args, 1, 1, field + " complete:n");
    const int n = to_int(args[0], field + " n");
    if (n < 1) throw std::invalid_argument(field + " n: must be >= 1");
    return complete_graph(n);
  }
  if (kind == "turan") {
    expect_args(args, 2, 2, field + " turan:n,r");
    const int n = to_int(args[0], field + " n"), r = to_int(args[1], field + " r");
    try {
      return turan_graph(n, r).first;
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(field + " r: " + e.what());
    }
  }
  if (kind == "file") {
    auto in = open_input(args[0], field + " file");
    try {
      return read_edge_list(in);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(field + " file \"" + args[0] + "\": " + e.what());
    }
  }
  throw std::invalid_argument(field + ": unknown kind \"" + kind + "\"");
}

Placement parse_placement_spec(const std::string& spec) {
  const std::string field = "--placement";
  auto [kind, args] = split_spec(spec, field);
  try {
    if (kind == "simplex") {
      expect_args(args, 1, 1, field + " simplex:d");
      return regular_simplex(to_int(args[0], field + " d"));
    }
    if (kind == "turan-simplex") {
      expect_args(args, 2, 2, field + " turan-simplex:n,d");
      return turan_simplex_placement(to_int(args[0], field + " n"), to_int(args[1], field + " d"));
    }
    if (kind == "crosspolytope") {
      expect_args(args, 2, 2, field + " crosspolytope:n,d");
      return crosspolytope_placement(to_int(args[0], field + " n"), to_int(args[1], field + " d"));
    }
    if (kind == "circle") {
      expect_args(args, 1, 1, field + " circle:n");
      return unit_circle_placement(roots_of_unity_angles(to_int(args[0], field + " n"))).placement;
    }
    if (kind == "tetra") {
      expect_args(args, 1, 1, field + " tetra:h");
      return tetrahedron_h(to_double(args[0], field + " h"));
    }
    if (kind == "random") {
      expect_args(args, 3, 4, field + " random:n,d,seed[,centered]");
      bool centered = false;
      if (args.size() == 4) {
        if (args[3] != "centered") {
          throw std::invalid_argument(field + " random: fourth argument must be \"centered\"");
        }
        centered = true;
      }
      return random_sphere_placement(to_int(args[0], field + " n"), to_int(args[1], field + " d"),
                                     to_u64(args[2], field + " seed"), centered);
    }
    if (kind == "file") {
      auto in = open_input(args[0], field + " file");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw std::invalid_argument(field + " file \"" + args[0] + "\": invalid JSON");
      }
      return placement_from_json(j);
    }
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.rfind(field, 0) == 0) throw;
    throw std::invalid_argument(field + " " + kind + ": " + msg);
  }
  throw std::invalid_argument(field + ": unknown kind \"" + kind + "\"");
}

namespace {

int default_threads() {
  if (const char* env = std::getenv("RIGIDSPEC_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

struct Common {
  std::string output;
  std::string manifest;
  int threads = 0;
};

struct Emitter {
  std::ostream& out;
  std::vector<std::string> outputs;

  void write(const std::string& path, const std::string& text) {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("--output: cannot write \"" + path + "\"");
    f << text;
    outputs.push_back(path);
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--output,-o", c.output, "Write the result here instead of stdout");
  sub->add_option("--manifest", c.manifest, "Run manifest path");
  sub->add_option("--threads", c.threads, "Worker cap (default: RIGIDSPEC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
}

void add_optimizer_flags(CLI::App* sub, OptimizerConfig& cfg, std::string& gauge) {
  sub->add_option("--restarts", cfg.restarts, "Restart count")->check(CLI::PositiveNumber);
  sub->add_option("--max-iters", cfg.max_iters, "Iterations per restart")
      ->check(CLI::PositiveNumber);
  sub->add_option("--step", cfg.initial_step, "Initial step");
  sub->add_option("--decay", cfg.decay, "Step decay factor in (0,1]");
  sub->add_option("--seed", cfg.seed, "Seed");
  sub->add_option("--gauge", gauge, "center-unit-scale | unit-sphere");
  sub->add_option("--smoothing", cfg.smoothing_width, "Softmin width relative to the gap");
  sub->add_option("--tol", cfg.tol, "Stop when the best gap gains less than this");
  sub->add_option("--patience", cfg.patience, "Iterations over which --tol is measured");
  sub->add_option("--jitter", cfg.jitter, "Jitter on canonical starts");
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Rigidity and stiffness matrix spectra, bounds and gap optimization", "rigidspec"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;

  std::string graph_spec, placement_spec;
  double tol = -1.0;
  bool lower = false;
  std::string format = "json";
  auto* spectrum = app.add_subcommand("spectrum", "Clustered spectrum of L (and L^-)");
  spectrum->add_option("--graph", graph_spec, "Graph spec")->required();
  spectrum->add_option("--placement", placement_spec, "Placement spec")->required();
  spectrum->add_option("--tol", tol, "Cluster tolerance (default 1e-8 max(1,|L|))");
  spectrum->add_flag("--lower", lower, "Also report the spectrum of L^-");
  spectrum->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(spectrum, common);

  std::string suite = "all", grid_text;
  int samples = -1;
  std::uint64_t seed = 1;
  bool failures_only = false;
  auto* verify = app.add_subcommand("verify", "Check closed-form results numerically");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_option("--grid", grid_text, "Ranges, e.g. n=4..10,d=2..4");
  verify->add_option("--samples", samples, "Random instances (suite default when omitted)");
  verify->add_option("--seed", seed, "Seed");
  verify->add_flag("--failures-only", failures_only, "Only serialize failing entries");
  add_common(verify, common);

  int bn = 0, bd = 0;
  bool observe = false;
  OptimizerConfig cfg;
  std::string gauge = gauge_name(cfg.gauge);
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds for a_d(K_n)");
  bounds->add_option("n", bn, "Vertex count")->required();
  bounds->add_option("d", bd, "Dimension")->required();
  bounds->add_flag("--observe", observe, "Attach the optimizer's best gap");
  add_optimizer_flags(bounds, cfg, gauge);
  add_common(bounds, common);

  int od = 0;
  bool no_traces = false;
  auto* optimize = app.add_subcommand("optimize", "Maximize the spectral gap over placements");
  optimize->add_option("--graph", graph_spec, "Graph spec")->required();
  optimize->add_option("--d", od, "Dimension")->required();
  optimize->add_flag("--no-traces", no_traces, "Omit per-restart traces");
  add_optimizer_flags(optimize, cfg, gauge);
  add_common(optimize, common);

  std::string tag, n_range, d_range, k_range;
  ProbeParams probe;
  auto* conjecture = app.add_subcommand("conjecture", "Numerical probe of an open conjecture");
  conjecture->add_option("tag", tag, "Probe tag")->required()->check(CLI::IsMember(probe_tags()));
  conjecture->add_option("--n", n_range, "Vertex range lo..hi");
  conjecture->add_option("--d", d_range, "Dimension range lo..hi");
  conjecture->add_option("--k", k_range, "Replication range lo..hi");
  conjecture->add_option("--samples", probe.samples, "Samples per instance");
  conjecture->add_option("--restarts", probe.restarts, "Optimizer restarts");
  conjecture->add_option("--max-iters", probe.max_iters, "Optimizer iterations");
  conjecture->add_option("--seed", probe.seed, "Seed");
  conjecture->add_option("--base-seed", probe.base_seed, "Seed of base placements");
  add_common(conjecture, common);

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-run the command stored in a manifest");
  replay->add_option("manifest", replay_path, "Manifest JSON")->required();

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*replay) {
    try {
      auto in = open_input(replay_path, "manifest");
      json m;
      in >> m;
      std::vector<std::string> again = m.at("argv").get<std::vector<std::string>>();
      if (again.empty() || (again.size() > 1 && again[1] == "replay")) {
        throw std::invalid_argument("manifest: argv is not replayable");
      }
      return run_cli(again, out, err);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  const int threads = common.threads > 0 ? common.threads : default_threads();
  Emitter emit{out, {}};
  json params;
  std::string command;
  int code = kExitOk;
  std::uint64_t run_seed = 0;

  try {
    if (*spectrum) {
      command = "spectrum";
      params = {{"graph", graph_spec}, {"placement", placement_spec}, {"tol", tol},
                {"lower", lower}, {"format", format}};
      const Graph g = parse_graph_spec(graph_spec);
      const Placement p = parse_placement_spec(placement_spec);
      if (p.size() != g.num_vertices()) {
        throw std::invalid_argument("--placement: has " + std::to_string(p.size()) +
                                    " points but the graph has " +
                                    std::to_string(g.num_vertices()) + " vertices");
      }
      const FrameworkMatrices fm = build_framework(g, p);
      const MultiplicitySpectrum ls = clustered_spectrum(fm.stiffness, tol);
      std::ostringstream text;
      if (format == "csv") {
        write_spectrum_csv(text, ls);
        if (lower) {
          text << "# lower\n";
          write_spectrum_csv(text, clustered_spectrum(fm.lower_stiffness, tol));
        }
      } else {
        json j = {{"graph", graph_spec}, {"placement", placement_spec}, {"n", g.num_vertices()},
                  {"d", p.dim()}, {"edges", g.num_edges()}, {"stiffness", spectrum_to_json(ls)}};
        if (lower) j["lower_stiffness"] = spectrum_to_json(clustered_spectrum(fm.lower_stiffness, tol));
        text << j.dump(2) << "\n";
      }
      emit.write(common.output, text.str());
    } else if (*verify) {
      command = "verify";
      run_seed = seed;
      params = {{"suite", suite}, {"grid", grid_text}, {"samples", samples}, {"seed", seed}};
      VerifyOptions opts;
      opts.grid = Grid::parse(grid_text);
      opts.samples = samples;
      opts.seed = seed;
      opts.threads = threads;
      const VerifyReport r = run_verify(suite, opts);
      emit.write(common.output, verify_report_to_json(r, failures_only).dump(2) + "\n");
      if (!r.pass()) {
        err << "verify: " << r.failures() << " of " << r.entries.size() << " instances failed\n";
        code = kExitVerifyFailed;
      }
    } else if (*bounds) {
      command = "bounds";
      cfg.gauge = parse_gauge(gauge);
      cfg.threads = threads;
      run_seed = cfg.seed;
      params = {{"n", bn}, {"d", bd}, {"observe", observe}};
      if (observe) params["config"] = config_to_json(cfg);
      BoundReport r = bound_report(bn, bd);
      if (observe) r.gap_observed = gap_ascent(complete_graph(bn), bd, cfg).best_gap;
      emit.write(common.output, bound_report_to_json(r).dump(2) + "\n");
    } else if (*optimize) {
      command = "optimize";
      cfg.gauge = parse_gauge(gauge);
      cfg.threads = threads;
      run_seed = cfg.seed;
      params = {{"graph", graph_spec}, {"d", od}, {"config", config_to_json(cfg)}};
      const Graph g = parse_graph_spec(graph_spec);
      if (od < 1) throw std::invalid_argument("--d: must be >= 1");
      const OptimizeResult r = gap_ascent(g, od, cfg);
      json j = {{"graph", graph_spec},
                {"d", od},
                {"config", config_to_json(cfg)},
                {"result", optimize_result_to_json(r, !no_traces)},
                {"note", "best_gap is a numerical lower bound on a_d(G)"}};
      emit.write(common.output, j.dump(2) + "\n");
    } else if (*conjecture) {
      command = "conjecture";
      if (!n_range.empty()) probe.n = parse_int_range(n_range, "--n");
      if (!d_range.empty()) probe.d = parse_int_range(d_range, "--d");
      if (!k_range.empty()) probe.k = parse_int_range(k_range, "--k");
      probe.threads = threads;
      run_seed = probe.seed;
      params = {{"tag", tag}, {"n", n_range}, {"d", d_range}, {"k", k_range},
                {"samples", probe.samples}, {"restarts", probe.restarts},
                {"max_iters", probe.max_iters}, {"seed", probe.seed},
                {"base_seed", probe.base_seed}};
      emit.write(common.output, conjecture_probe(tag, probe).dump(2) + "\n");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string manifest_path = common.manifest;
  if (manifest_path.empty()) {
    manifest_path = common.output.empty() ? "rigidspec_manifest.json" : common.output + ".manifest.json";
  }
  json manifest = {
      {"command", command},
      {"argv", argv},
      {"params", params},
      {"seed", run_seed},
      {"threads", threads},
      {"version", kVersion},
      {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
      {"outputs", emit.outputs},
      {"exit_code", code}};
  std::ofstream mf(manifest_path);
  if (!mf) {
    err << "error: --manifest: cannot write \"" << manifest_path << "\"\n";
    return kExitUsage;
  }
  mf << manifest.dump(2) << "\n";
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace rigidspec
