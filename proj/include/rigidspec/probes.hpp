#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigidspec/graph.hpp"

namespace rigidspec {

struct ProbeParams {
  std::pair<int, int> n{0, 0};  // {0, 0} selects the probe default
  std::pair<int, int> d{0, 0};
  std::pair<int, int> k{0, 0};
  int samples = -1;
  int restarts = -1;
  int max_iters = -1;
  std::uint64_t seed = 1;
  std::uint64_t base_seed = 1;
  int threads = 1;
};

const std::vector<std::string>& probe_tags();

/// Runs a numerical sweep and records margins. Never asserts the conjecture:
/// the record holds per-instance margins, min/max margins and counterexample
/// candidates with enough data to reproduce them. Throws on an unknown tag.
nlohmann::json conjecture_probe(const std::string& tag, const ProbeParams& params);

/// Random simple `degree`-regular graph on n vertices: configuration-model
/// pairing, rejecting loops and multi-edges. Throws unless n > degree and
/// n * degree is even.
Graph random_regular_graph(int n, int degree, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace rigidspec
