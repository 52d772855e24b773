#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rigidspec/canonical.hpp"
#include "rigidspec/cli.hpp"
#include "rigidspec/framework.hpp"
#include "rigidspec/graph.hpp"
#include "rigidspec/optimizer.hpp"
#include "rigidspec/probes.hpp"
#include "rigidspec/results.hpp"
#include "rigidspec/spectral.hpp"
#include "rigidspec/verify.hpp"

namespace py = pybind11;
using namespace rigidspec;

namespace {

Placement to_placement(const Matrix& coords) { return Placement(coords); }

std::vector<std::pair<double, int>> as_pairs(const std::vector<Cluster>& cs) {
  std::vector<std::pair<double, int>> out;
  for (const Cluster& c : cs) out.emplace_back(c.value, c.multiplicity);
  return out;
}

std::string optimize_json(const Graph& g, int d, int restarts, int max_iters, std::uint64_t seed,
                          const std::string& gauge, int threads) {
  OptimizerConfig c;
  c.restarts = restarts;
  c.max_iters = max_iters;
  c.seed = seed;
  c.gauge = parse_gauge(gauge);
  c.threads = threads;
  return optimize_result_to_json(gap_ascent(g, d, c)).dump();
}

std::string verify_json(const std::string& suite, const std::string& grid, int samples,
                        std::uint64_t seed, int threads) {
  VerifyOptions o;
  o.grid = Grid::parse(grid);
  o.samples = samples;
  o.seed = seed;
  o.threads = threads;
  return verify_report_to_json(run_verify(suite, o)).dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<std::string> argv{"rigidspec"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(argv, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_rigidspec, m) {
  m.doc() = "Rigidity and stiffness matrix spectra of bar frameworks";
  m.attr("__version__") = kVersion;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.emplace_back(u, v);
             return Graph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("degree", &Graph::degree)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("turan_graph", [](int n, int r) { return turan_graph(n, r).first; }, py::arg("n"), py::arg("r"));

  m.def("regular_simplex", [](int d) { return regular_simplex(d).coords(); }, py::arg("d"));
  m.def("turan_simplex_placement", [](int n, int d) { return turan_simplex_placement(n, d).coords(); });
  m.def("crosspolytope_placement", [](int n, int d) { return crosspolytope_placement(n, d).coords(); });
  m.def("tetrahedron_h", [](double h) { return tetrahedron_h(h).coords(); }, py::arg("h"));
  m.def("circle_placement", [](int n) {
    return unit_circle_placement(roots_of_unity_angles(n)).placement.coords();
  }, py::arg("n"));
  m.def("random_sphere_placement", [](int n, int d, std::uint64_t seed, bool centered) {
    return random_sphere_placement(n, d, seed, centered).coords();
  }, py::arg("n"), py::arg("d"), py::arg("seed") = 1, py::arg("centered") = false);

  m.def("rigidity_matrix", [](const Graph& g, const Matrix& p) { return rigidity_matrix(g, to_placement(p)); },
        py::arg("graph"), py::arg("points"));
  m.def("stiffness", [](const Graph& g, const Matrix& p) { return stiffness(g, to_placement(p)); },
        py::arg("graph"), py::arg("points"));
  m.def("lower_stiffness", [](const Graph& g, const Matrix& p) { return lower_stiffness_direct(g, to_placement(p)); },
        py::arg("graph"), py::arg("points"));
  m.def("eigenvalues", [](const Matrix& a) { return symmetric_eigenvalues(a); }, py::arg("matrix"));
  m.def("clustered_spectrum", [](const Matrix& a, double tol) {
    return as_pairs(clustered_spectrum(a, tol > 0 ? tol : default_cluster_tol(a)).clusters);
  }, py::arg("matrix"), py::arg("tol") = 0.0);
  m.def("spectral_gap", [](const Graph& g, const Matrix& p) { return spectral_gap(g, to_placement(p)); },
        py::arg("graph"), py::arg("points"));

  m.def("simplex_spectrum", [](int d) { return as_pairs(simplex_spectrum_closed_form(d).clusters); });
  m.def("turan_simplex_spectrum", [](int n, int d) { return as_pairs(turan_simplex_spectrum_closed_form(n, d).clusters); });
  m.def("crosspolytope_spectrum", [](int n, int d) { return as_pairs(crosspolytope_spectrum_closed_form(n, d).clusters); });
  m.def("tetrahedron_spectrum", [](double h) { return as_pairs(tetrahedron_h_spectrum_closed_form(h).clusters); });
  m.def("circle_spectrum", [](int n) { return as_pairs(circle_spectrum_closed_form(n).clusters); });

  m.def("k4_witness_bound", [](const Matrix& p) { return k4_witness_bound(to_placement(p)); }, py::arg("points"));
  m.def("kyfan_projection", &kyfan_projection, py::arg("n"));
  m.def("_bound_report", [](int n, int d) { return bound_report_to_json(bound_report(n, d)).dump(); });

  m.def("_gap_ascent", &optimize_json, py::arg("graph"), py::arg("d"), py::arg("restarts"),
        py::arg("max_iters"), py::arg("seed"), py::arg("gauge"), py::arg("threads"));
  m.def("_verify", &verify_json, py::arg("suite"), py::arg("grid"), py::arg("samples"), py::arg("seed"),
        py::arg("threads"));
  m.def("_conjecture", [](const std::string& tag, int samples, std::uint64_t seed) {
    ProbeParams p;
    p.samples = samples;
    p.seed = seed;
    return conjecture_probe(tag, p).dump();
  });
  m.def("cli", &cli, py::arg("args"), "Run the command-line tool in-process; returns (code, stdout, stderr).");
}
