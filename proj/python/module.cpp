// Python bindings: jobs in, JSON reports out.

#include "gonal/cli/job.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

std::string run_job_json(const std::string& command, const std::string& input, std::optional<std::string> field,
                         std::uint64_t seed, int jobs, const std::string& stop_after, const std::string& patch,
                         std::optional<std::pair<std::string, std::string>> parameter, int samples, bool timings) {
  gonal::JobSpec job;
  job.command = command;
  job.input = input;
  job.field = std::move(field);
  job.seed = seed;
  job.jobs = jobs;
  job.stop_after = stop_after;
  if (!patch.empty()) job.patch = gonal::parse_patch(patch);
  job.parameter = std::move(parameter);
  job.samples = samples;
  job.timings = timings;
  gonal::Report report;
  {
    py::gil_scoped_release release;
    report = gonal::run_job(job);
  }
  return report.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gonal maps, plane models and radical parametrizations of canonical curves";
  py::register_exception<gonal::Error>(m, "Error", PyExc_ValueError);
  m.attr("SCHEMA_VERSION") = gonal::kReportSchemaVersion;
  m.attr("DEFAULT_SEED") = gonal::kDefaultSolveSeed;
  m.def("stage_names", &gonal::stage_names);
  m.def("fnv1a_hex", &gonal::fnv1a_hex, py::arg("data"));
  m.def("run_job_json", &run_job_json, py::arg("command"), py::arg("input"), py::arg("field") = py::none(),
        py::arg("seed") = gonal::kDefaultSolveSeed, py::arg("jobs") = 1, py::arg("stop_after") = "",
        py::arg("patch") = "", py::arg("parameter") = py::none(), py::arg("samples") = 20, py::arg("timings") = false);
  m.def(
      "render_text", [](const std::string& json) { return gonal::render_text(gonal::Report::parse(json)); },
      py::arg("report_json"));
}
