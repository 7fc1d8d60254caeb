#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "orbitkit/json_io.hpp"
#include "orbitkit/parabolic.hpp"
#include "orbitkit/flag_atlas.hpp"
#include "orbitkit/twisted_map.hpp"

using namespace orbitkit;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ORBITKIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Json run_json(const std::string& args, int expected_status = 0) {
  Run r = run(args);
  REQUIRE(r.status == expected_status);
  return Json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("orbitkit_cli_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("mu matches the 2x2 closed form") {
  Json j = run_json(R"(mu --lambda 1,-1 --point '{"z":{"0,1":"2"},"xi":{"0,1":"3"}}')");
  CHECK(matrix_from_json(j["orbit_point"]["F"]) == QMatrix::from_rows({{-5, 8}, {-3, 5}}));
  CHECK(scalar_from_json(j["w"]["0,1"]) == Q(mpq_class(-3, 2)));
  CHECK(j["schema"] == "1");
}

TEST_CASE("mu agrees with the library on a flag") {
  ParabolicData p = build_parabolic({{Q(3), Q(1), Q(0)}});
  auto atlas = weyl_cosets(p);
  const std::string point = R"({"sigma":[1,2,0],"z":{"0,1":"1/2","1,2":"-3","0,2":"2"},"xi":{"0,1":"4","0,2":"-1/3"}})";
  Json j = run_json("mu --lambda 3,1,0 --point '" + point + "'");
  ChartPoint cp = chart_point_from_json(p, atlas, Json::parse(point));
  CHECK(matrix_from_json(j["orbit_point"]["F"]) == mu_global(p, cp).f);
  CHECK(chart_point_from_json(p, atlas, j["point"]) == cp);
}

TEST_CASE("transition and action") {
  ParabolicData p = build_parabolic({{Q(1), Q(-1)}});
  auto atlas = weyl_cosets(p);
  Json t = run_json(R"(transition --lambda 1,-1 --to 1,0 --point '{"z":{"0,1":"2"},"xi":{"0,1":"3"}}')");
  ChartPoint moved = chart_point_from_json(p, atlas, t["transition"]);
  CHECK(moved.sigma.perm() == std::vector<int>{1, 0});
  CHECK(mu_global(p, moved).f == QMatrix::from_rows({{-5, 8}, {-3, 5}}));

  // The origin of the identity chart is not in the other chart.
  CHECK(run(R"(transition --lambda 1,-1 --to 1,0 --point '{"z":{"0,1":"0"}}')").status == 3);
  CHECK(run(R"(transition --lambda 1,-1 --to 0,0 --point '{}')").status == 2);

  const QMatrix g = QMatrix::from_rows({{2, 1}, {1, 1}});
  Json a = run_json(R"(action --lambda 1,-1 --point '{"z":{"0,1":"2"},"xi":{"0,1":"3"}}' --g ')" + to_json(g).dump() +
                    "'");
  ChartPoint image = chart_point_from_json(p, atlas, a["image"]);
  CHECK(mu_global(p, image).f == coadjoint(g, QMatrix::from_rows({{-5, 8}, {-3, 5}})));
  CHECK(matrix_from_json(a["orbit_point"]["F"]) == mu_global(p, image).f);
}

TEST_CASE("verify-all report") {
  Json j = run_json("verify-all --lambda 3,1,0 --samples 5 --seed 11 --scale 3/2 --jobs 1");
  CHECK(j["ok"] == true);
  REQUIRE(j["summary"].size() == 6);
  CHECK(j["summary"].contains("scale"));
  for (const auto& [name, counts] : j["summary"].items()) {
    CHECK(counts["passed"] == 5);
    CHECK(counts["failed"] == 0);
  }
  CHECK(j["results"].size() == 30);

  // Reports do not depend on the worker count.
  const std::string args = "verify-all --lambda 2,1,1,0 --samples 6 --seed 5";
  CHECK(run(args + " --jobs 1").out == run(args + " --jobs 3").out);

  Json sorted = run_json("verify-all --lambda 0,1,0 --samples 2 --seed 1");
  CHECK(sorted["lambda_permutation"] == Json::array({0, 2, 1}));
}

TEST_CASE("examples") {
  CHECK(run_json("examples --case sl2 --s 3 --samples 4 --seed 2")["ok"] == true);
  CHECK(run_json("examples --case gl3 --samples 4 --seed 2")["ok"] == true);
  CHECK(run_json("examples --case supq --p 2 --q 1 --s 3 --samples 4 --seed 2")["ok"] == true);
  CHECK(run("examples --case nope").status == 2);
}

TEST_CASE("config files and output files") {
  auto out = std::filesystem::temp_directory_path() / "orbitkit_cli_report.json";
  auto cfg = temp_file("config.json", Json{{"suite", "verify-all"},
                                           {"lambda", Json::array({1, -1})},
                                           {"samples", 3},
                                           {"seed", 4},
                                           {"output", out.string()}}
                                          .dump());
  Run r = run("--config " + cfg.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  Json j = Json::parse(in);
  CHECK(j["config"]["samples"] == 3);
  CHECK(j["ok"] == true);

  // Flags on the command line win over the file.
  Json k = run_json("--config " + cfg.string() + " verify-all --samples 1 --output ''");
  CHECK(k["results"].size() == 5);

  CHECK(run("--config " + temp_file("nosuite.json", "{}").string()).status == 2);
  CHECK(run("--config " + temp_file("broken.json", "{").string()).status == 2);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run("verify-all --lambda 1,1").status == 2);
  CHECK(run("verify-all --lambda 1,0 --n 3").status == 2);
  CHECK(run("verify-all --lambda 1,x").status == 2);
  CHECK(run("verify-all --lambda 1,0 --samples 0").status == 2);
  CHECK(run("mu --lambda 1,0").status == 2);
  CHECK(run("mu --lambda 1,0 --point '{\"z\":{\"1,0\":\"1\"}}'").status == 2);
  CHECK(run("mu --lambda 1,0 --point '{\"z\":'").status == 2);
  CHECK(run("--bogus").status == 2);
}
