#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using namespace chowcount;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const PathSet &paths = PathSet::reference()) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, paths);
  return {code, out.str(), err.str()};
}

std::vector<std::string> values(const Json &doc) {
  std::vector<std::string> v;
  for (const auto &r : doc["results"])
    v.push_back(r["value"].get<std::string>());
  return v;
}

} // namespace

TEST_CASE("chow: all three methods agree") {
  const auto r = run({"chow", "--p", "0", "--n", "2", "--d", "2", "--method", "all"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["query"]["subcommand"] == "chow");
  CHECK(doc["query"]["params"]["p"] == "0");
  CHECK(values(doc) == std::vector<std::string>{"6", "6", "6"});
  CHECK(doc["results"][1]["method"] == "recursive");
  CHECK(doc["match"] == true);
}

TEST_CASE("chow: single values") {
  auto doc = Json::parse(run({"chow", "--p", "3", "--n", "3", "--d", "9"}).out);
  CHECK(values(doc) == std::vector<std::string>{"1"});
  CHECK_FALSE(doc.contains("match"));
  doc = Json::parse(run({"chow", "--p", "1", "--n", "3", "--d", "4", "--method", "recursive"}).out);
  CHECK(values(doc) == std::vector<std::string>{"126"});
}

TEST_CASE("chow: csv output") {
  const auto r = run({"chow", "--p", "1", "--n", "3", "--d", "4", "--method", "all", "--format", "csv"});
  CHECK(r.out == "method,value\nclosed,126\nrecursive,126\nseries,126\nmatch,1\n");
}

TEST_CASE("chow: large values are exact decimal strings") {
  const auto doc = Json::parse(run({"chow", "--p", "8", "--n", "16", "--d", "40"}).out);
  const auto value = doc["results"][0]["value"];
  REQUIRE(value.is_string());
  CHECK(value.get<std::string>().size() > 20);
}

TEST_CASE("series") {
  auto r = run({"series", "--p", "0", "--n", "1", "--order", "3", "--format", "csv"});
  CHECK(r.out == "d,chi\n0,1\n1,2\n2,3\n3,4\n");

  auto doc = Json::parse(run({"series", "--p", "2", "--n", "2", "--order", "2"}).out);
  CHECK(doc["coefficients"] == Json::array({"1", "1", "1"}));

  doc = Json::parse(run({"series", "--p", "1", "--n", "3", "--order", "2", "--method", "functional"}).out);
  CHECK(doc["coefficients"] == Json::array({"1", "6", "21"}));
  CHECK(doc["results"][2]["d"] == "2");

  r = run({"series", "--p", "1", "--n", "2", "--order", "2", "--method", "all", "--format", "csv"});
  CHECK(r.out == "d,closed,functional\n0,1,1\n1,3,3\n2,6,6\n");
}

TEST_CASE("table") {
  auto r = run({"table", "--p", "0", "--n", "1", "--max-d", "4", "--format", "csv"});
  CHECK(r.out == "d,chi\n0,1\n1,2\n2,3\n3,4\n4,5\n");
  r = run({"table", "--p", "2", "--n", "2", "--max-d", "3", "--format", "csv"});
  CHECK(r.out == "d,chi\n0,1\n1,1\n2,1\n3,1\n");
  const auto doc = Json::parse(run({"table", "--p", "1", "--n", "2", "--max-d", "3", "--method", "recursive"}).out);
  CHECK(values(doc) == std::vector<std::string>{"1", "3", "6", "10"});
}

TEST_CASE("quaternionic") {
  auto doc = Json::parse(run({"quaternionic", "--p", "0", "--qn", "1", "--d", "2", "--oracle", "auto"}).out);
  CHECK(values(doc) == std::vector<std::string>{"3", "3"});
  CHECK(doc["results"][1]["method"] == "p0-oracle");
  CHECK(doc["match"] == true);

  doc = Json::parse(run({"quaternionic", "--p", "1", "--qn", "1", "--d", "7"}).out);
  CHECK(values(doc) == std::vector<std::string>{"1"});

  doc = Json::parse(run({"quaternionic", "--p", "1", "--qn", "2", "--d", "1", "--oracle", "auto"}).out);
  CHECK(values(doc) == std::vector<std::string>{"6", "6"});
  CHECK(doc["results"][1]["method"] == "d1-oracle");

  const auto r = run({"quaternionic", "--p", "1", "--qn", "2", "--d", "3", "--oracle", "auto"});
  CHECK(r.code == 0);
  doc = Json::parse(r.out);
  CHECK(doc.contains("note"));
  CHECK_FALSE(doc.contains("match"));
}

TEST_CASE("verify: passing suites exit 0") {
  auto r = run({"verify", "--suite", "recursion", "--max-p", "4", "--max-n", "6", "--max-d", "8"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["failures"].empty());
  CHECK(doc["passed"] == true);
  CHECK(doc["cases_run"].is_string());
  CHECK_FALSE(doc.contains("elapsed_ms"));

  r = run({"verify", "--suite", "base-cases", "--max-n", "6", "--max-d", "8"});
  CHECK(r.code == 0);
  r = run({"verify", "--suite", "all", "--timing"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).contains("elapsed_ms"));
}

TEST_CASE("verify: a corrupted table yields failures and exit 1") {
  PathSet paths = PathSet::reference();
  paths.closed = [](const ChowParams &c) {
    ExactInt v = chow_euler_closed(c).chi;
    return c.d() == 5 ? v * 2 : v;
  };
  const auto r = run({"verify", "--suite", "all"}, paths);
  CHECK(r.code == 1);
  const auto doc = Json::parse(r.out);
  CHECK(doc["passed"] == false);
  REQUIRE_FALSE(doc["failures"].empty());
  const auto &f = doc["failures"][0];
  CHECK(f["inputs"]["d"] == "5");
  CHECK(f["expected"].is_string());
  CHECK(f["actual"].is_string());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"chow", "--p", "1", "--n", "3"}).code == 2);
  CHECK(run({"chow", "--p", "x", "--n", "3", "--d", "1"}).code == 2);
  CHECK(run({"chow", "--p", "4", "--n", "3", "--d", "1"}).code == 2);
  CHECK(run({"chow", "--p", "1", "--n", "3", "--d", "1", "--method", "magic"}).code == 2);
  CHECK(run({"series", "--p", "0", "--n", "1", "--format", "xml"}).code == 2);
  CHECK(run({"quaternionic", "--p", "4", "--qn", "2", "--d", "1"}).code == 2);
  CHECK(run({"verify", "--max-d", "-3"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"table", "--p", "0", "--n", "1", "--max-d", "-1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"chow", "--p", "2", "--n", "5", "--d", "7", "--method", "all"},
           {"series", "--p", "1", "--n", "4", "--order", "9", "--method", "all"},
           {"verify", "--suite", "all"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
