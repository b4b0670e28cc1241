#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + QFOCK_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliRun result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) result.out.append(buf, got);
  const int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("module report in text form") {
  const CliRun r = run_cli("report --n 1 --p 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dim_vp: 6"));
  CHECK(contains(r.out, "gl decomposition: (3,0) (2,1)"));
  CHECK(contains(r.out, "weyl dimension sum: 6"));
  CHECK(contains(r.out, "characters agree: yes"));
  CHECK(contains(r.out, "result: pass"));

  const CliRun r22 = run_cli("report --n 2 --p 2");
  CHECK(r22.exit_code == 0);
  CHECK(contains(r22.out, "dim_vp: 9"));

  const CliRun r21 = run_cli("report --n 2 --p 1");
  CHECK(r21.exit_code == 0);
  CHECK(contains(r21.out, "dim_vp: 3"));
  CHECK(contains(r21.out, "gl decomposition: (1,0,0)"));
}

TEST_CASE("module report in json form") {
  const CliRun r = run_cli("report --n 1 --p 3 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "report");
  CHECK(j.at("dim_vp") == 6);
  CHECK(j.at("weyl_dim_sum") == 6);
  CHECK(j.at("weight_enumeration") == 6);
  CHECK(j.at("characters_agree") == true);
  CHECK(j.at("character_at_ones_matches_dim") == true);
  CHECK(j.at("gl_decomposition") == nlohmann::json({{3, 0}, {2, 1}}));
  CHECK(j.at("pass") == true);
  for (const auto& w : j.at("weights")) {
    if (w.contains("positive_definite")) CHECK(w.at("positive_definite") == true);
  }
}

TEST_CASE("module report restricted to one weight") {
  const CliRun below = run_cli("report --n 1 --p 3 --weight 2,1");
  CHECK(below.exit_code == 0);
  CHECK(contains(below.out, "weight (2,1): level 1 dim_bar 2 dim_vp 2"));
  CHECK(contains(below.out, "positive_definite yes"));

  const CliRun critical = run_cli("report --n 1 --p 3 --weight 0,3");
  CHECK(critical.exit_code == 0);
  CHECK(contains(critical.out, "weight (0,3): level 3 dim_bar 2 dim_vp 1"));

  const CliRun bogus = run_cli("report --n 1 --p 3 --weight 9,9");
  CHECK(bogus.exit_code == 2);
}

TEST_CASE("determinant suite symbolic route") {
  const CliRun r = run_cli("lemma3 --r 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out,
                 "det: 1 * s^4 + -2 * s^2 t1 + -2 * s^2 t2 + 1 * t1^2 + "
                 "2 * t1 t2 + 1 * t2^2"));
  CHECK(contains(r.out, "det matches formula: yes"));
  CHECK(contains(r.out, "inverse identity: ok"));
  CHECK(contains(r.out, "result: pass"));
}

TEST_CASE("determinant suite numeric route") {
  const CliRun critical = run_cli("lemma3 --r 2 --s 2 --t 1,3");
  CHECK(critical.exit_code == 0);
  CHECK(contains(critical.out, "det: 0"));
  CHECK(contains(critical.out, "rank: 2"));
  CHECK(contains(critical.out, "result: pass"));

  const CliRun regular = run_cli("lemma3 --r 3 --s 3 --t 1,1,2 --format json");
  REQUIRE(regular.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(regular.out);
  CHECK(j.at("rank") == 8);
  CHECK(j.at("critical") == false);
  CHECK(j.at("det_matches_formula") == true);
  CHECK(j.at("inverse_identity") == true);
}

TEST_CASE("determinant suite sampled route") {
  const CliRun r = run_cli("lemma3 --r 4 --samples 50 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "samples: 50"));
  CHECK(contains(r.out, "matched: 50"));
  CHECK(contains(r.out, "result: pass"));
}

TEST_CASE("determinant suite flag validation") {
  CHECK(run_cli("lemma3 --r 2 --s 2").exit_code == 2);
  CHECK(run_cli("lemma3 --r 2 --t 1,2").exit_code == 2);
  CHECK(run_cli("lemma3 --r 2 --s 1 --t 1,2,3").exit_code == 2);
  CHECK(run_cli("lemma3 --r 9").exit_code == 2);
}

TEST_CASE("rank-one suite") {
  const CliRun tiny = run_cli("q2 --p 1");
  CHECK(tiny.exit_code == 0);
  CHECK(contains(tiny.out, "dim: 2"));
  CHECK(contains(tiny.out, "decomposition: (1,0)"));
  CHECK(contains(tiny.out, "result: pass"));

  const CliRun r = run_cli("q2 --p 4 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("dim") == 8);
  CHECK(j.at("pass") == true);
  CHECK(j.at("primitive_unique_at_top") == true);
  REQUIRE(j.at("primitives").size() == 1);
  CHECK(j.at("primitives")[0].at("k") == 4);
  CHECK(j.at("primitives")[0].at("alpha") == "1");
  CHECK(j.at("primitives")[0].at("beta") == "-2");
  CHECK(j.at("orthonormality_residual").get<double>() < 1e-10);
  CHECK(j.at("adjointness_residual").get<double>() < 1e-10);
  CHECK(j.at("matrix_element_residual").get<double>() < 1e-10);
  CHECK(j.at("matrix_elements").size() == 36);
}

TEST_CASE("structure-constant checks") {
  const CliRun text = run_cli("check-algebra --n 2");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "superbracket axioms: ok"));
  CHECK(contains(text.out, "defining representation: ok"));
  CHECK(contains(text.out, "q-statistics: ok"));
  CHECK(contains(text.out, "result: pass"));

  const CliRun j = run_cli("check-algebra --n 2 --format json");
  REQUIRE(j.exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("pass") == true);
  CHECK(parsed.at("suites").at("superbracket").at("ok") == true);
  CHECK(parsed.at("suites").at("defining_rep").at("ok") == true);
  CHECK(parsed.at("suites").at("q_statistics").at("ok") == true);
  CHECK(parsed.at("suites").at("q_statistics").at("violations").empty());

  const CliRun fault = run_cli("check-algebra --n 2 --inject-fault");
  CHECK(fault.exit_code == 1);
  CHECK(contains(fault.out, "result: fail"));
  CHECK(contains(fault.out, "violated:"));

  CHECK(run_cli("check-algebra --n 5").exit_code == 2);
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run_cli("check-algebra --bogus").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("report --n 1 --p 3 --format yaml").exit_code == 2);
  CHECK(run_cli("report --n 1 --p 3 --level-cap 1").exit_code == 2);
}
