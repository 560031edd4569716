#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forestcolor/acceptance.hpp"
#include "forestcolor/algorithm.hpp"
#include "forestcolor/harness.hpp"
#include "forestcolor/oracles.hpp"
#include "forestcolor/sequence.hpp"

namespace py = pybind11;
using namespace forestcolor;

namespace {

// Keeps a forest and the algorithm that owns its updates together.
class Session {
 public:
  Session(std::size_t n, Color delta, Color extra, const std::string& alg, std::uint64_t seed)
      : forest_(n, Palette(delta, extra)), alg_(make_algorithm(alg, forest_.palette(), seed)) {}

  std::size_t insert(VertexId u, VertexId v, std::optional<VertexId> parent) {
    return alg_->apply(forest_, Update::insert(u, v, parent));
  }
  std::size_t erase(VertexId u, VertexId v) { return alg_->apply(forest_, Update::erase(u, v)); }
  std::size_t apply_script(const std::string& text) {
    std::size_t total = 0;
    for (const Update& up : parse_sequence(text)) total += alg_->apply(forest_, up);
    return total;
  }
  Color color(VertexId u, VertexId v) const { return forest_.color(u, v); }
  std::vector<std::tuple<VertexId, VertexId, Color>> coloring() const {
    std::vector<std::tuple<VertexId, VertexId, Color>> out;
    for (const auto& [e, c] : forest_.coloring()) out.emplace_back(e.a, e.b, c);
    return out;
  }
  bool is_proper() const {
    try {
      forest_.assert_proper();
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  std::string snapshot() const { return forest_.snapshot(); }
  std::size_t edge_count() const { return forest_.edge_count(); }

 private:
  ColoredForest forest_;
  std::unique_ptr<Algorithm> alg_;
};

std::string run_csv(const std::string& alg, const std::string& workload, Color delta, Color extra, std::size_t n,
                    std::optional<std::uint64_t> seed, std::size_t reps, unsigned depth, std::size_t steps) {
  ExperimentConfig cfg;
  cfg.algorithm = alg;
  cfg.workload = workload;
  cfg.delta = delta;
  cfg.extra = extra;
  cfg.n = n;
  cfg.seed = seed;
  cfg.reps = reps;
  cfg.depth = depth;
  cfg.steps = steps;
  return to_csv(run_experiment(cfg));
}

std::string histogram(const std::string& script, const std::string& alg, Color delta, Color extra,
                      std::size_t runs, std::uint64_t seed) {
  HistogramConfig cfg;
  cfg.algorithm = alg;
  cfg.delta = delta;
  cfg.extra = extra;
  cfg.script = parse_sequence(script);
  cfg.runs = runs;
  cfg.seed = seed;
  return histogram_csv(run_histogram(cfg));
}

py::dict verdict(int id) {
  Verdict v = run_criterion(id);
  py::dict d;
  d["id"] = v.id;
  d["name"] = v.name;
  d["passed"] = v.pass;
  d["detail"] = v.detail;
  d["seconds"] = v.seconds;
  return d;
}

std::size_t count_colorings(const std::string& script, Color delta, Color extra) {
  UpdateSequence seq = parse_sequence(script);
  std::size_t n = 0;
  for (const Update& up : seq) n = std::max<std::size_t>(n, std::max(up.u, up.v) + std::size_t{1});
  ColoredForest f(n, Palette(delta, extra));
  for (const Update& up : seq) {
    if (up.kind == UpdateKind::Insert) {
      f.insert_topology(up.u, up.v, up.parent_hint);
    } else {
      f.delete_topology(EdgeKey(up.u, up.v));
    }
  }
  return enumerate_proper_colorings(f).size();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "dynamic edge coloring of forests";

  static py::exception<Error> error(m, "ForestColorError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, ("[" + std::string(to_string(e.kind())) + "] " + e.what()).c_str());
    }
  });

  py::class_<Session>(m, "Session")
      .def(py::init<std::size_t, Color, Color, const std::string&, std::uint64_t>(), py::arg("n"),
           py::arg("delta"), py::arg("extra") = 0, py::arg("algorithm") = "greedy", py::arg("seed") = 0)
      .def("insert", &Session::insert, py::arg("u"), py::arg("v"), py::arg("parent") = py::none())
      .def("delete", &Session::erase, py::arg("u"), py::arg("v"))
      .def("apply_script", &Session::apply_script, py::arg("text"))
      .def("color", &Session::color)
      .def("coloring", &Session::coloring)
      .def("is_proper", &Session::is_proper)
      .def("snapshot", &Session::snapshot)
      .def_property_readonly("edge_count", &Session::edge_count);

  m.def("run_experiment", &run_csv, py::arg("algorithm"), py::arg("workload"), py::arg("delta") = 3,
        py::arg("extra") = 0, py::arg("n") = 0, py::arg("seed") = py::none(), py::arg("reps") = 1,
        py::arg("depth") = 0, py::arg("steps") = 0, "Run a workload and return the CSV text.");
  m.def("histogram", &histogram, py::arg("script"), py::arg("algorithm") = "dist-maint", py::arg("delta") = 3,
        py::arg("extra") = 0, py::arg("runs") = 10000, py::arg("seed") = 0,
        "Coloring distribution of seeded runs of a script, as CSV text.");
  m.def("run_criterion", &verdict, py::arg("id"));
  m.def("suite_criteria", &suite_criteria, py::arg("suite"));
  m.def("count_colorings", &count_colorings, py::arg("script"), py::arg("delta"), py::arg("extra") = 0);
  m.def("toggle_expected_recourse",
        [](unsigned delta, unsigned kappa, unsigned h) {
          return toggle_expected_recourse(delta, kappa, h).convert_to<double>();
        });
  m.def("algorithm_ids", &algorithm_ids);
  m.def("workload_ids", &workload_ids);
  m.attr("CSV_HEADER") = kCsvHeader;
  m.attr("HISTOGRAM_HEADER") = kHistogramHeader;
}
