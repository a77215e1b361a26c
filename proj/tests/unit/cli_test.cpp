#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "abideal/cli.hpp"

using namespace abideal;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("ideals table") {
  const Result r = run({"ideals", "--type", "A", "--rank", "2"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);  // header plus four ideals
  CHECK(rows[0] == "ideal_id\tlength\tword\tnormalizer\troots");
  CHECK(rows[1] == "0\t0\te\t1,2\t{}");
  CHECK(rows[2] == "1\t1\ts0\t-\t{1,1}");
  CHECK(rows[3] == "2\t2\ts2 s0\t2\t{1,0; 1,1}");
  CHECK(rows[4] == "3\t2\ts1 s0\t1\t{0,1; 1,1}");
}

TEST_CASE("ideals JSON") {
  const Result r = run({"ideals", "--type", "B", "--rank", "3", "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["type"] == "B");
  CHECK(doc["rank"] == 3);
  REQUIRE(doc["ideals"].size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& row = doc["ideals"][k];
    CHECK(row["ideal_id"] == k);
    CHECK(row["length"] == row["roots"].size());
    CHECK(row["word"].is_string());
    CHECK(row["normalizer"].is_array());
  }
}

TEST_CASE("orbits") {
  const Result r = run({"orbits", "--type", "A", "--rank", "2", "--ideal-id", "3"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"S\tsigma\tlength\tL\tdim", "{}\te\t0\t0\t0",
                                                 "{0,1-1d}\ts0 s1 s0\t3\t2\t2", "{1,1-1d}\ts0\t1\t1\t1"});
  const Result j = run({"orbits", "--type", "A", "--rank", "2", "--ideal-id", "3", "--v", "s0", "--json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["context"]["v_word"] == "0");
  REQUIRE(doc["orbits"].size() == 2);
  CHECK(doc["orbits"][1]["dim"] == 2);
  CHECK(run({"orbits", "--type", "A", "--rank", "2", "--ideal-id", "3", "--v", "0"}).out ==
        run({"orbits", "--type", "A", "--rank", "2", "--ideal-id", "3", "--v", "s0"}).out);
}

TEST_CASE("poset DOT is a three-node chain") {
  const Result r = run({"poset", "--type", "A", "--rank", "2", "--ideal-id", "2", "--format", "dot"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(std::count_if(rows.begin(), rows.end(), [](const std::string& s) { return s.find("[label=") != std::string::npos; }) == 3);
  CHECK(std::count_if(rows.begin(), rows.end(), [](const std::string& s) { return s.find("->") != std::string::npos; }) == 2);
}

TEST_CASE("poset JSON") {
  const Result r = run({"poset", "--type", "C", "--rank", "3", "--ideal-id", "5", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["context"]["type"] == "C");
  CHECK(doc["context"]["ideal_id"] == 5);
  CHECK(doc["nodes"].size() >= 2);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--type", "D", "--rank", "4", "--suite", "involutions"});
  CHECK(r.code == 0);
  REQUIRE(lines(r.out).size() == 1);
  CHECK(r.out.rfind("SUITE involutions: pass (", 0) == 0);

  const Result all = run({"verify", "--type", "B", "--rank", "2", "--suite", "all"});
  CHECK(all.code == 0);
  const auto rows = lines(all.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].rfind("SUITE minuscule: pass", 0) == 0);
  CHECK(rows[4].rfind("SUITE phi: pass", 0) == 0);
}

TEST_CASE("oracle") {
  const Result r = run({"oracle-typea", "--n", "3", "--ideal-id", "2", "--q", "2,3"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["reports"].size() == 2);
  CHECK(doc["reports"][0]["classes"] == 3);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"ideals", "--type", "A"}).code == 2);
  CHECK(run({"ideals", "--type", "A", "--rank", "2", "--frobnicate"}).code == 2);
  CHECK(run({"ideals", "--type", "Q", "--rank", "2"}).code == 2);
  CHECK(run({"ideals", "--type", "E", "--rank", "5"}).code == 2);
  CHECK(run({"orbits", "--type", "A", "--rank", "2", "--ideal-id", "4"}).code == 2);
  CHECK(run({"orbits", "--type", "A", "--rank", "2", "--ideal-id", "2", "--v", "s1 s0"}).code == 2);
  CHECK(run({"orbits", "--type", "A", "--rank", "2", "--ideal-id", "2", "--v", "s1"}).code == 2);
  CHECK(run({"poset", "--type", "A", "--rank", "2", "--ideal-id", "2", "--format", "svg"}).code == 2);
  CHECK(run({"verify", "--type", "A", "--rank", "2", "--suite", "nothing"}).code == 2);
  CHECK(run({"oracle-typea", "--n", "5", "--ideal-id", "0", "--q", "2"}).code == 2);
  CHECK(run({"oracle-typea", "--n", "3", "--ideal-id", "0", "--q", "4"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"poset", "--type", "B", "--rank", "3", "--ideal-id", "6", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> all{"verify", "--type", "A", "--rank", "3", "--suite", "all"};
  CHECK(run(all).out == run(all).out);
}
