#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "t3dt/json_io.hpp"

using namespace t3dt;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(T3DT_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const Json& j) {
  std::string path = "/tmp/t3dt_test_" + name + ".json";
  std::ofstream f(path);
  f << j.dump();
  return path;
}

}  // namespace

TEST_CASE("bps-rank prints the count") {
  RunResult r = run("bps-rank --l 2 --k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4\n");
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run("dt --kind pgl --n 4").exit_code == 2);                      // composite rank
  CHECK(run("verify integrality --kind sl --max-n 2").exit_code == 2);   // no Sym side
  CHECK(run("dt --kind nosuch --n 1").exit_code == 2);
  CHECK(run("complex ranks /nonexistent.json").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verification commands succeed and are byte-deterministic") {
  std::string args = "--format json --min-deg -6 --max-deg 12 verify integrality --kind gl --max-n 3";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  Json j = Json::parse(a.output);
  CHECK(j["kind"] == "gl");
  for (const auto& row : j["results"]) CHECK(row["equal"].get<bool>());

  RunResult lang = run("--max-deg 10 --min-deg -6 verify langlands --primes 2,3");
  CHECK(lang.exit_code == 0);
}

TEST_CASE("dt emits exact series with the config embedded") {
  RunResult r = run("--format json --max-deg 6 dt --kind sl --n 2");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["config"]["max_deg"] == 6);
  GradedSeries s = series_from_json(j["series"]);
  CHECK(s.coeff(0) >= 8);  // the eight central points sit at degree 0

  // rank one is the single-block series t^{-2}(1+t)^3/(1-t^2)
  RunResult one = run("--format json --max-deg 6 dt --kind gl --n 1");
  CHECK(one.exit_code == 0);
  GradedSeries block = series_from_json(Json::parse(one.output)["series"]);
  CHECK(block.equal_on(kind_block(GroupKind::GL, 6), -2, 6));
}

TEST_CASE("complex subcommands work on files") {
  // trivial monodromy on gl_2: identity matrices, full adjoint subspace
  Json file{{"matrices", Json::array()}, {"subspace", "full"}};
  Json id = Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})});
  file["matrices"] = Json::array({id, id, id});
  std::string path = write_temp("trivial_monodromy", file);

  RunResult ranks = run("--format json complex ranks " + path);
  CHECK(ranks.exit_code == 0);
  Json j = Json::parse(ranks.output);
  CHECK(j["ranks"] == Json::array({4, 12, 12, 4}));

  RunResult orient = run("complex torsion --orientation-check --n 3 --seed 7");
  CHECK(orient.exit_code == 0);
  // randomized suites demand an explicit seed
  CHECK(run("complex torsion --orientation-check --n 2").exit_code == 2);

  Json direct{{"dims", Json::array({1, 1})},
              {"differentials", Json::array({Json::array({Json::array({"2"})})})}};
  std::string dpath = write_temp("two_term", direct);
  RunResult tor = run("--format json complex torsion " + dpath);
  CHECK(tor.exit_code == 0);
  CHECK(Json::parse(tor.output)["torsion"] == "1/2");

  // non-commuting monodromy is an input error naming the offending pair
  Json bad{{"matrices", Json::array()}, {"subspace", "full"}};
  Json m1 = Json::array({Json::array({"1", "1"}), Json::array({"0", "1"})});
  Json m2 = Json::array({Json::array({"1", "0"}), Json::array({"1", "1"})});
  bad["matrices"] = Json::array({m1, m2, id});
  std::string bpath = write_temp("non_commuting", bad);
  RunResult nc = run("complex ranks " + bpath, /*merge_stderr=*/true);
  CHECK(nc.exit_code == 2);
  CHECK(nc.output.find("operators 1 and 2 do not commute") != std::string::npos);
}

TEST_CASE("strata subcommands") {
  Json point{{"kind", "sl"},
             {"triples",
              Json::array({Json::array({Json{{"r", "1"}, {"theta", "0"}},
                                        Json{{"r", "1"}, {"theta", "0"}},
                                        Json{{"r", "1"}, {"theta", "1/4"}}}),
                           Json::array({Json{{"r", "1"}, {"theta", "0"}},
                                        Json{{"r", "1"}, {"theta", "0"}},
                                        Json{{"r", "1"}, {"theta", "3/4"}}})})}};
  std::string path = write_temp("bad_point", point);

  RunResult cls = run("--format json strata classify " + path);
  CHECK(cls.exit_code == 0);
  CHECK(Json::parse(cls.output)["stratum"] == Json::array({1, 1}));

  RunResult fib = run("--format json strata fibers " + path);
  CHECK(fib.exit_code == 0);
  Json j = Json::parse(fib.output);
  CHECK(j["bad_point"] == true);
  CHECK(j["sl_pgl_fiber"] == 4);

  RunResult tw = run("--format json strata twisted --n 2 --vector 1,1,0");
  CHECK(tw.exit_code == 0);
  Json t = Json::parse(tw.output);
  CHECK(t["component_count"] == "7");
  CHECK(t["normal_form"] == Json::array({"1", "0", "0"}));
  CHECK(t["witness_det"] == "1");
}

TEST_CASE("exp check") {
  Json list = eigenlist_json({{GaussianRational(0), Rational(0)},
                              {GaussianRational(0), Rational(1)}});
  std::string path = write_temp("violation", list);
  RunResult r = run("--format json exp check " + path);
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["etale"] == false);
  CHECK(j["stabilisers_preserved"] == false);
}

TEST_CASE("centre subcommand") {
  RunResult r = run("--format json centre --kind sl --partition 2,2");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["free_rank"] == 1);
  CHECK(j["torsion_order"] == "2");
  CHECK(j["component_action_trivial"] == true);
}
