#include "doctest.h"
#include "fixtures.hpp"

#include "gonal/cli/job.hpp"

using namespace gonal;

namespace {

JobSpec job_for(const std::string& command, const std::string& fixture) {
  JobSpec j;
  j.command = command;
  j.input = fixtures::read_text(fixture);
  return j;
}

const Report& x0_58_full() {
  static const Report r = run_job(job_for("full", "x0_58.txt"));
  return r;
}

}  // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("patch specs") {
  auto p = parse_patch("410,43");
  CHECK(p.first == std::vector<int>{0, 1, 4});
  CHECK(p.second == std::vector<int>{3, 4});
  CHECK_THROWS_AS(parse_patch("012"), Error);
  CHECK_THROWS_AS(parse_patch("0125,34"), Error);
  CHECK_THROWS_AS(parse_patch("011,34"), Error);
  CHECK_THROWS_AS(parse_patch("019,34"), Error);
}

TEST_CASE("reports echo the schema, input hash and seed") {
  auto j = job_for("classify", "genus5_net.txt");
  j.seed = 77;
  Report r = run_job(j);
  CHECK(r["schema_version"] == kReportSchemaVersion);
  CHECK(r["input_hash"] == "fnv1a64:" + fnv1a_hex(j.input));
  CHECK(r["seed"] == 77);
  CHECK(r["stratum"] == "Genus5Generic");
  CHECK(exit_status(r) == 0);
  CHECK(!r.contains("timings"));
}

TEST_CASE("input gates") {
  JobSpec j;
  j.command = "classify";
  j.input = "field: GF(2)\nvars: x,y,z,u,v,w\nx^2\n";
  Report r = run_job(j);
  CHECK(r["error"]["stage"] == "parse");
  CHECK(exit_status(r) == 2);
  j.input = "field: GF(3)\nvars: x,y,z,u,v\nx^2\n";
  CHECK(run_job(j)["error"]["stage"] == "parse");
  j.input = "vars: x,y,z,u,v\n";
  CHECK(run_job(j)["error"]["message"] == "line 2, column 1: no polynomials in input");
  j.input = "vars: x,y,z\nx^2\n";
  CHECK(run_job(j)["error"]["message"] == "expected 5 variables (genus 5) or 6 variables (genus 6), got 3");
  j.input = "vars: x,y,z,u,v\nx^2 + * y\n";
  CHECK(run_job(j)["error"]["message"] == "line 2, column 7: unexpected '*'");
  j.input = "vars: X,Y\nX^2 + Y^2 - 1\n";
  CHECK(run_job(j)["error"]["message"] == "plane-curve input is only accepted by `radical`");
  j.command = "nonsense";
  CHECK_THROWS_AS(run_job(j), Error);
  j.command = "classify";
  j.stop_after = "nowhere";
  CHECK_THROWS_AS(run_job(j), Error);
}

TEST_CASE("field override") {
  auto j = job_for("classify", "genus5_net.txt");
  j.field = "GF(101)";
  Report r = run_job(j);
  CHECK(r["stages"]["parse"]["field"]["name"] == "GF(101)");
  j.field = "GF(2)";
  CHECK(run_job(j)["error"]["stage"] == "parse");
}

TEST_CASE("betti on the generic genus-5 fixture") {
  Report r = run_job(job_for("betti", "genus5_net.txt"));
  CHECK(r["stages"]["betti"]["compact"] == "1; 3; 3; 1");
  CHECK(!r["stages"].contains("classify"));
}

TEST_CASE("classify a rational normal quintic") {
  Report r = run_job(job_for("classify", "rational_normal_quintic.txt"));
  CHECK(r["stratum"] == "Hyperelliptic");
  Report full = run_job(job_for("full", "rational_normal_quintic.txt"));
  CHECK(full["skipped"]["stage"] == "surface");
  CHECK(exit_status(full) == 0);
}

TEST_CASE("genus 5 over F_p: gonal maps and plane model") {
  auto j = job_for("plane-model", "genus5_net.txt");
  j.field = "GF(32003)";
  Report r = run_job(j);
  REQUIRE(!r.contains("error"));
  const auto& s = r["stages"];
  CHECK(s["quintic"]["rank"].get<int>() >= 3);
  CHECK(!s["gonal"]["maps"].empty());
  CHECK(s["plane-model"]["degree"].get<int>() * s["plane-model"]["map_degree"].get<int>() == 6);
  CHECK(!s.contains("radical"));
}

TEST_CASE("radical stage on a plane curve with a given parameter") {
  auto j = job_for("radical", "x0_58_plane.txt");
  CHECK(run_job(j)["error"]["message"] == "plane-curve input needs --parameter NUM,DEN");
  j.parameter = {{"3*X^2 + Y^2 - 6*Y + 3", "X*Y - Y^2 + 3*X + 4*Y"}};
  Report r = run_job(j);
  REQUIRE(!r.contains("error"));
  const auto& s = r["stages"]["radical"];
  CHECK(s["degree"] == 4);
  CHECK(s["y"]["den"] == "2*t^2*X + 5*t^2 + 5*t*X + 5*t + 3*X + 9");
  CHECK(s["numeric"]["ok"] == true);
  CHECK(s["roots"].size() == 4);
  CHECK(s["definitions"][0]["name"] == "R1");
  CHECK(s["leaves"].contains("P3"));
  CHECK(s["roots"][0]["tree"]["op"] == "*");
}

TEST_CASE("--stop-after and --patch") {
  auto j = job_for("full", "x0_58.txt");
  j.stop_after = "betti";
  Report r = run_job(j);
  CHECK(r["stopped_after"] == "betti");
  CHECK(!r["stages"].contains("surface"));
  j.stop_after = "scrolls";
  j.patch = parse_patch("014,01");
  r = run_job(j);
  CHECK(r["stages"]["scrolls"]["patches_tried"] == 1);
  CHECK(r["stages"]["scrolls"]["geometric_count"] == 5);
  j.command = "classify";
  j.patch.reset();
  r = run_job(j);
  CHECK(r["error"]["stage"] == "parse");
  CHECK(r["error"]["message"] == "stage 'scrolls' is not part of `classify` for this input");
}

TEST_CASE("full pipeline on X0(58)") {
  const Report& r = x0_58_full();
  REQUIRE(!r.contains("error"));
  const auto& s = r["stages"];
  CHECK(r["stratum"] == "Genus6Generic-DelPezzo");
  CHECK(s["scrolls"]["geometric_count"] == 5);
  CHECK(s["gonal"]["pencil"].size() == 2);
  CHECK(s["plane-model"]["degree"] == 6);
  CHECK(s["plane-model"]["map_degree"] == 1);
  CHECK(s["plane-model"]["singular_points"].size() == 2);
  CHECK(s["radical"]["degree"] == 4);
  CHECK(s["radical"]["parameter_source"] == "conics through the singular points");
  CHECK(s["radical"]["numeric"]["ok"] == true);
  CHECK(render_text(r).find("geometric_count: 5") != std::string::npos);
}

TEST_CASE("same seed and input give identical reports") {
  auto j = job_for("full", "x0_58.txt");
  j.jobs = 2;
  CHECK(run_job(j).dump() == x0_58_full().dump());
}
