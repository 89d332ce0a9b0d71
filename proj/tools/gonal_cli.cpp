// gonal: gonality strata, gonal maps, plane models and radical
// parametrizations of canonical curves of genus 5 and 6.

#include "gonal/cli/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gonal::Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gonal maps, plane models and radical parametrizations of canonical curves"};
  app.require_subcommand(1, 1);

  gonal::JobSpec job;
  std::string input_path, patch, parameter;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "Input file ('-' for stdin)")->required();
    sub->add_option("--field", job.field, "Override the field header: Q or GF(p)");
    sub->add_option("--seed", job.seed, "Seed for every randomized choice")->capture_default_str();
    sub->add_option("--jobs", job.jobs, "Parallel patch systems in the scroll search")->capture_default_str();
    sub->add_option("--format", job.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--stop-after", job.stop_after, "Last stage to run")->check(CLI::IsMember(gonal::stage_names()));
    sub->add_option("--patch", patch, "Single patch pair for the scroll search, e.g. 012,34");
    sub->add_option("--parameter", parameter, "Gonal parameter NUM,DEN for plane-curve input");
    sub->add_option("--samples", job.samples, "Sample points for the numeric check of radicals")
        ->capture_default_str();
    sub->add_flag("--timings", job.timings, "Report wall-clock time per stage");
  };
  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify", "Gonality stratum"},
      {"betti", "Minimal free resolution and Betti table"},
      {"gonal", "Degree-4 gonal map"},
      {"plane-model", "Plane model of degree 6"},
      {"radical", "Solution by radicals over Q(t)"},
      {"full", "Every stage"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    job.command = app.get_subcommands().front()->get_name();
    if (!patch.empty()) job.patch = gonal::parse_patch(patch);
    if (!parameter.empty()) {
      const auto comma = parameter.find(',');
      if (comma == std::string::npos) throw gonal::Error("--parameter expects NUM,DEN");
      job.parameter = {parameter.substr(0, comma), parameter.substr(comma + 1)};
    }
    job.input = read_input(input_path);
    const gonal::Report report = gonal::run_job(job);
    if (job.format == "json") {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << gonal::render_text(report);
    }
    return gonal::exit_status(report);
  } catch (const std::exception& e) {
    std::cerr << "gonal: " << e.what() << "\n";
    return 1;
  }
}
