#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arbor/cli.hpp"
#include "arbor/verifier.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "arbor");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = arbor::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("value") {
  auto r = run({"value", "--tree", "P:7", "--model", "semirandom-first"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "37/63"));
  auto s = run({"value", "--tree", "S:4", "--model", "random-random"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "value: 1/2 "));
  auto bad = run({"value", "--tree", "bad"});
  CHECK(bad.code == 1);
  CHECK(has(bad.err, "error"));
  CHECK(run({"value", "--tree", "P:3", "--model", "smart"}).code == 1);
  CHECK(run({"value"}).code == 1);
}

TEST_CASE("value reads edge lists from stdin") {
  auto r = run({"value", "--tree", "-", "--model", "oo"}, "3\n0 1\n1 2\n");
  CHECK(r.code == 0);
  CHECK(has(r.out, "2/3"));
  auto j = run({"value", "--tree", "-", "--model", "semirandom-second", "--format", "json"}, "3\n0 1\n0 2\n");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["value"]["num"] == "4");
  CHECK(parsed["value"]["den"] == "9");
}

TEST_CASE("table") {
  auto r = run({"table", "--max", "7"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "53/90"));
  CHECK(has(r.out, "14/27"));
  CHECK(has(r.out, "386/735"));
  auto one = run({"table", "--max", "1", "--format", "csv"});
  CHECK(one.out == "n,p,q,p_approx,q_approx\n1,1,0,1.000000000000,0.000000000000\n");
  auto twenty = run({"table", "--max", "20", "--format", "json"});
  auto rows = nlohmann::json::parse(twenty.out)["rows"];
  CHECK(rows.size() == 20);
  CHECK(run({"table", "--max", "0"}).code == 1);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--n", "7", "--count"});
  CHECK(r.code == 0);
  CHECK(r.out == "11\n");
  auto stream = run({"enumerate", "--n", "4"});
  CHECK(stream.out == "4\n0 1\n0 3\n1 2\n\n4\n0 1\n0 2\n0 3\n");
}

TEST_CASE("stopping") {
  auto r = run({"stopping", "--tree", "S:3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "1  1/3"));
  CHECK(has(r.out, "2  4/9"));
  CHECK(has(r.out, "3  2/9"));
  CHECK(has(r.out, "odd mass: 5/9"));
}

TEST_CASE("simulate is deterministic") {
  auto a = run({"simulate", "--tree", "P:7", "--model", "random-random", "--trials", "20000", "--seed", "42"});
  auto b = run({"simulate", "--tree", "P:7", "--model", "random-random", "--trials", "20000", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(has(a.out, "11/21"));
  CHECK(run({"simulate", "--tree", "P:7", "--trials", "0"}).code == 1);
}

TEST_CASE("verify exit codes and reports") {
  auto r = run({"verify", "allrandom", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "allrandom_13_30_17_30"));

  auto j = run({"verify", "semirandom", "--n", "6", "--format", "json", "--threads", "1"});
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(arbor::report_to_json(arbor::report_from_json(parsed)) == parsed);
  CHECK(parsed["class_count"] == 6);

  auto with_values = run({"verify", "oo", "--n", "6", "--format", "json", "--values"});
  CHECK(nlohmann::json::parse(with_values.out)["values"].size() == 6);

  CHECK(run({"verify", "bogus", "--n", "5"}).code == 1);
  CHECK(run({"verify", "alternating", "--n", "6", "--k", "2"}).code == 1);
  CHECK(run({"verify", "alternating", "--n", "8", "--k", "2"}).code == 0);
  CHECK(run({"verify", "limbs", "--n", "6"}).code == 0);
}

TEST_CASE("verify writes files, one per order with --from") {
  auto dir = std::filesystem::temp_directory_path() / "arbor_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto out = (dir / "oo.json").string();
  auto r = run({"verify", "oo", "--from", "3", "--n", "5", "--output", out});
  CHECK(r.code == 0);
  for (int n = 3; n <= 5; ++n) {
    std::ifstream f(dir / ("oo.n" + std::to_string(n) + ".json"));
    REQUIRE(f);
    CHECK(nlohmann::json::parse(f)["order"] == n);
  }
  auto csv = (dir / "semi.csv").string();
  CHECK(run({"verify", "semirandom", "--n", "6", "--format", "csv", "--output", csv}).code == 0);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header == "class_index,canon_key,model,num,den,approx");
  std::filesystem::remove_all(dir);
}

TEST_CASE("ARBOR_THREADS supplies the default worker count") {
  setenv("ARBOR_THREADS", "3", 1);
  CHECK(run({"enumerate", "--n", "9", "--count"}).out == "47\n");
  setenv("ARBOR_THREADS", "many", 1);
  CHECK(run({"enumerate", "--n", "9", "--count"}).code == 1);
  unsetenv("ARBOR_THREADS");
}

TEST_CASE("help") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verify"));
}
