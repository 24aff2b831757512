#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "ordercheck/json_io.hpp"

using ordercheck::io::Json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = ordercheck::cli::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify") {
  const auto r = run({"verify", "--alpha", "[-1,1]", "--phi", "sinh"});
  CHECK(r.status == 0);
  const double value = r.json()["report"]["value"]["value"].get<double>();
  CHECK(value == doctest::Approx(4.90332).epsilon(1e-6));

  const auto cube = run({"verify", "--alpha", "[-2,-1,1,2]", "--phi", "poly:0,1"});
  CHECK(cube.status == 0);
  CHECK(cube.json()["policy"] == "exact");
  CHECK(cube.json()["report"]["value"]["exact"] == "523");
  CHECK(cube.json()["report"]["P"]["entries"] == Json::parse(R"(["3", "8"])"));

  CHECK(run({"verify", "--alpha", "[-1,1]", "--phi", "plus:10"}).json()["report"]["value"]["exact"] == "0");
  CHECK(run({"verify", "--alpha", "[-1,1]", "--phi", "sinh", "--exact"}).status == 2);
  CHECK(run({"verify", "--alpha", "[1,3]", "--phi", "x", "--recenter"}).status == 0);
  const auto human = run({"verify", "--alpha", "[-1,1]", "--phi", "x", "--format", "human"});
  CHECK(human.status == 0);
  CHECK(human.out.find("nonnegative: yes") != std::string::npos);
}

TEST_CASE("order") {
  const auto r = run({"order", "--a", R"({"entries":[1,1]})", "--b", R"({"entries":[3]})"});
  CHECK(r.status == 1);
  CHECK(r.json()["witness"]["dominates"] == false);
  CHECK(r.json()["witness"]["violating_t"] == "0");
  CHECK(r.json()["witness"]["margins"].size() == 3);

  const auto ok = run({"order", "--a", R"({"entries":[3,8]})", "--b", R"({"entries":[2,2]})", "--exact"});
  CHECK(ok.status == 0);
  CHECK(ok.json()["policy"] == "exact");
  CHECK(run({"order", "--a", "[0.5]", "--b", "[0.5]", "--exact"}).status == 2);
  CHECK(run({"order", "--a", "[0.5]", "--b", "[0.5]"}).status == 0);
}

TEST_CASE("certify and check-cert") {
  const std::string cert = "ordercheck_cli_cert.json";
  const auto c = run({"certify", "--alpha", "[-2,-1,1,2]", "--t", "0", "--out", cert});
  CHECK(c.status == 0);
  const Json j = Json::parse(slurp(cert));
  CHECK(j["case"] == "small-n");
  CHECK(j["A"] == "11");

  CHECK(run({"check-cert", cert, "--alpha", "[-2,-1,1,2]", "--t", "0"}).status == 0);

  Json bad = j;
  bad["B"] = "5";
  {
    std::ofstream out(cert);
    out << bad.dump(2);
  }
  const auto rejected = run({"check-cert", cert, "--alpha", "[-2,-1,1,2]", "--t", "0"});
  CHECK(rejected.status == 1);
  CHECK(rejected.json()["valid"] == false);
  CHECK(rejected.json()["failing_step"] == "B");

  bad = j;
  bad["bound_chain"][3]["lhs"] = "12";
  const auto step = run({"check-cert", bad.dump(), "--alpha", "[-2,-1,1,2]", "--t", "0"});
  CHECK(step.status == 1);
  CHECK(step.json()["failing_step"] == "rearrangement");
  std::remove(cert.c_str());

  // Exact subcommands refuse binary fractions written as JSON floats.
  CHECK(run({"certify", "--alpha", "[-0.5,0.5]", "--t", "0"}).status == 2);
  CHECK(run({"certify", "--alpha", R"(["-1/2","1/2"])", "--t", "1/8"}).status == 0);
  CHECK(run({"certify", "--alpha", "[-1,1]", "--t", "-1"}).status == 2);

  const auto table = run({"certify", "--alpha", "[-4,1,1,1,1]", "--t", "0", "--format", "human"});
  CHECK(table.out.find("case = large-n") != std::string::npos);
  CHECK(table.out.find("coefficient_identity") != std::string::npos);
}

TEST_CASE("karamata") {
  const auto r = run({"karamata", "--a", "[3,8]", "--b", "[2,2]", "--F", R"({"s0":0,"breakpoints":[[1,1]]})"});
  CHECK(r.status == 0);
  CHECK(r.json()["result"]["sum_a"] == "9");
  CHECK(r.json()["result"]["sum_b"] == "2");
  const auto failed = run({"karamata", "--a", "[1,1]", "--b", "[3]", "--F", R"({"s0":1})"});
  CHECK(failed.status == 1);
  CHECK(failed.json()["result"]["verdict"] == "hypothesis-failed");
}

TEST_CASE("integral") {
  const auto csv = run({"integral", "--f", "affine:1,-0.5", "--phi", "sinh", "--n", "10,100,1000", "--report", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("n,discrete_sum", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

  const auto exact = run({"integral", "--f", "affine:1,-1/2", "--phi", "poly:0,1", "--n", "2"});
  CHECK(exact.json()["rows"][0]["discrete_sum"]["exact"] == "7/1024");

  // f(x) = x is centered before use.
  CHECK(run({"integral", "--f", "affine:1,0", "--phi", "poly:0,1", "--n", "2"}).json()["rows"][0]["discrete_sum"]["exact"] == "7/1024");

  const auto step = run({"integral", "--f", R"({"breaks":["1/2"],"levels":[0,2]})", "--phi", "x", "--n", "2,4"});
  CHECK(step.status == 0);
  CHECK(run({"integral", "--f", "power:2", "--phi", "sinh", "--n", "5,50"}).status == 0);
  CHECK(run({"integral", "--f", "exp:1", "--phi", "sinh", "--n", "5"}).status == 0);
  CHECK(run({"integral", "--f", "affine:-1,0", "--phi", "sinh"}).status == 2);
  CHECK(run({"integral", "--f", "cosine:1", "--phi", "sinh"}).status == 2);
  CHECK(run({"integral", "--f", "affine:1,0", "--phi", "sinh", "--n", "10,5"}).status == 2);
}

TEST_CASE("scan") {
  const std::vector<std::string> args = {"scan", "--n", "2..8", "--phi", "sinh", "--phi", "poly:0,1",
                                         "--budget", "2000", "--seed", "42"};
  const auto a = run(args);
  CHECK(a.status == 0);
  CHECK(a.json()["seed"] == 42);
  CHECK(a.json()["instances_tested"] == 2000);
  CHECK(a.json()["violations"].empty());
  // Byte-stable for identical seeds, whatever the thread count.
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(run(threaded).out == a.out);
  CHECK(run(args).out == a.out);

  const auto ex = run({"scan", "--n", "2..4", "--phi", "x", "--exhaustive", "--half-range", "2", "--denominator", "1"});
  CHECK(ex.status == 0);

  const auto csv = run({"scan", "--n", "3", "--phi", "x", "--budget", "10", "--report", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out.find(',') != std::string::npos);

  CHECK(run({"scan", "--n", "5..2", "--phi", "x"}).status == 2);
  CHECK(run({"scan", "--n", "2..3", "--phi", "x", "--distribution", "cauchy"}).status == 2);
}

TEST_CASE("ORDERCHECK_SEED is the fallback seed") {
  setenv("ORDERCHECK_SEED", "17", 1);
  const auto env = run({"scan", "--n", "2..5", "--phi", "x", "--budget", "50"});
  CHECK(env.json()["seed"] == 17);
  const auto flag = run({"scan", "--n", "2..5", "--phi", "x", "--budget", "50", "--seed", "17"});
  CHECK(env.out == flag.out);
  CHECK(run({"scan", "--n", "2..5", "--phi", "x", "--budget", "50", "--seed", "3"}).json()["seed"] == 3);
  setenv("ORDERCHECK_SEED", "not-a-number", 1);
  CHECK(run({"scan", "--n", "2..5", "--phi", "x", "--budget", "50"}).status == 2);
  unsetenv("ORDERCHECK_SEED");
}

TEST_CASE("input errors map to status 2 with an error object") {
  const auto unsorted = run({"verify", "--alpha", "[1,-1]", "--phi", "x"});
  CHECK(unsorted.status == 2);
  CHECK(unsorted.json()["error"]["code"] == "NotSorted");

  const auto sum = run({"verify", "--alpha", "[1,2]", "--phi", "x"});
  CHECK(sum.json()["error"]["code"] == "NonZeroSum");

  CHECK(run({"verify", "--alpha", "[-1,1]", "--phi", "cosh"}).json()["error"]["code"] == "ParseError");
  CHECK(run({"verify", "--alpha", "[-1,1"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"verify", "--alpha", "missing_file.json", "--phi", "x"}).status == 2);
  CHECK(run({"verify", "--alpha", "[-1,1]", "--phi", "poly:1,-1"}).json()["error"]["code"] == "InvalidAtom");
}

TEST_CASE("report paths and version") {
  const std::string path = "ordercheck_cli_report.json";
  const auto r = run({"verify", "--alpha", "[-1,1]", "--phi", "x", "--report", path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp(path))["command"] == "verify");
  std::remove(path.c_str());

  const auto v = run({"--version"});
  CHECK(v.status == 0);
  CHECK(v.out.find("ordercheck 1.0.0 (report schema 1)") != std::string::npos);
}

TEST_CASE("phi and function spec grammar") {
  using ordercheck::cli::parse_function_spec;
  using ordercheck::cli::parse_phi_spec;
  using ordercheck::parse_rational;
  CHECK(parse_phi_spec("sinh") == ordercheck::OddConvexCombination::exp_diff());
  CHECK(parse_phi_spec("exp_diff") == ordercheck::OddConvexCombination::exp_diff());
  CHECK(parse_phi_spec("x") == ordercheck::OddConvexCombination::identity());
  CHECK(parse_phi_spec("plus:3/2") == ordercheck::OddConvexCombination::plus(parse_rational("3/2")));
  CHECK(parse_phi_spec("poly:1,0,3").eval(parse_rational("1")) == 4);
  CHECK(parse_phi_spec(R"({"linear": 2})").eval(parse_rational("1")) == 2);
  CHECK(parse_phi_spec(R"(pl:{"s0": 1, "breakpoints": [[1, 1]]})").eval(parse_rational("2")) == 3);
  CHECK(parse_function_spec("affine:2,1").exact_at(parse_rational("1")) == parse_rational("3"));
  CHECK(parse_function_spec("power:3,1,-1").exact_at(parse_rational("1/2")) == parse_rational("-7/8"));
  CHECK(parse_function_spec("step:{\"breaks\":[\"1/2\"],\"levels\":[0,1]}").is_step());
}
