#include <doctest.h>

#include "rigidspec/probes.hpp"

using namespace rigidspec;

namespace {

void check_record(const nlohmann::json& r, const std::string& tag) {
  CHECK(r.at("tag") == tag);
  for (const char* key : {"params", "margin", "instances", "min_margin", "max_margin",
                          "counterexample_candidates", "wall_seconds"})
    CHECK(r.contains(key));
  CHECK_FALSE(r.at("instances").empty());
}

}  // namespace

TEST_CASE("random regular graphs") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_regular_graph(10, 4, 3, s);
    CHECK(g.num_edges() == 20);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
  }
  CHECK(random_regular_graph(8, 4, 1) == random_regular_graph(8, 4, 1));
  CHECK_THROWS_AS(random_regular_graph(4, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_regular_graph(7, 3, 1), std::invalid_argument);
}

TEST_CASE("probe tags") {
  CHECK(probe_tags().size() == 5);
  CHECK_THROWS_AS(conjecture_probe("unknown", {}), std::invalid_argument);
}

TEST_CASE("spherical second eigenvalue probe") {
  ProbeParams p;
  p.samples = 10;
  const auto r = conjecture_probe("spherical-second-eig", p);
  check_record(r, "spherical-second-eig");
  CHECK(r.at("instances").size() == 10);
  for (const auto& inst : r.at("instances")) CHECK(inst.at("floor_holds").get<bool>());
}

TEST_CASE("top-n-sum probe") {
  ProbeParams p;
  p.n = {3, 6};
  p.d = {2, 3};
  p.samples = 20;
  const auto r = conjecture_probe("top-n-sum", p);
  check_record(r, "top-n-sum");
  CHECK(r.at("min_proved_margin").get<double>() >= -1e-9);
  CHECK(std::abs(r.at("equilateral_k3").at("sum").get<double>() - 6.0) <= 1e-12);
}

TEST_CASE("kn-upper probe") {
  ProbeParams p;
  p.n = {6, 6};
  p.d = {3, 3};
  p.restarts = 2;
  p.max_iters = 30;
  const auto r = conjecture_probe("kn-upper", p);
  check_record(r, "kn-upper");
  const auto& inst = r.at("instances")[0];
  CHECK(inst.at("n_over_2d").get<double>() == 1.0);
  CHECK(inst.at("margin").get<double>() == doctest::Approx(1.0 - inst.at("best_gap").get<double>()));
}

TEST_CASE("regular-2d probe") {
  ProbeParams p;
  p.n = {6, 6};
  p.samples = 1;
  p.restarts = 1;
  p.max_iters = 20;
  check_record(conjecture_probe("regular-2d", p), "regular-2d");
}

TEST_CASE("repeated-points probe") {
  ProbeParams p;
  p.k = {2, 3};
  const auto r = conjecture_probe("repeated-points", p);
  check_record(r, "repeated-points");
  bool saw_k2 = false;
  for (const auto& inst : r.at("instances"))
    if (inst.at("k").get<int>() == 2) {
      saw_k2 = true;
      CHECK(inst.at("ratio").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK(saw_k2);
  ProbeParams same = p;
  CHECK(conjecture_probe("repeated-points", same).at("instances") == r.at("instances"));
}
