#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using weylinv::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "weylinv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("group order") {
    Run r = cli({"group", "order", "--generators", "1,2,3,4,5,6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("51840") != std::string::npos);
    Run j = cli({"--format", "json", "group", "order", "--generators", "2,3,4,5,6"});
    CHECK(nlohmann::json::parse(j.out)["order"] == 1920);
  }

  TEST_CASE("poincare series") {
    Run r = cli({"compute", "poincare", "--closed-form", "prop3.7", "--max-degree", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "[1]\n");
    Run a = cli({"--format", "json", "compute", "poincare", "--closed-form", "generators", "--max-degree", "30"});
    Run b = cli({"--format", "json", "compute", "poincare", "--closed-form", "prop3.11", "--max-degree", "30"});
    CHECK(nlohmann::json::parse(a.out)["coefficients"] == nlohmann::json::parse(b.out)["coefficients"]);
  }

  TEST_CASE("oracle dimension") {
    Run r = cli({"--format", "json", "oracle", "dim", "--degree", "20"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dimension"] == 5);
    CHECK(j["match"] == true);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"verify", "no-such-suite"}).code == 2);
    CHECK(cli({"oracle", "dim", "--degree", "7"}).code == 2);
    CHECK(cli({}).code == 2);
  }

  TEST_CASE("a bad errata file is reported") {
    CHECK(cli({"--errata", "/nonexistent/errata.txt", "verify", "group"}).code != 0);
    std::string path = "weylinv_test_errata.txt";
    {
      std::ofstream f(path);
      f << "rel.y60_y64 | x4 | wrong on purpose | me\n";
    }
    Run r = cli({"--format", "json", "--errata", path, "verify", "lemma39"});
    std::remove(path.c_str());
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    bool bad = false;
    for (const auto& c : j["checks"])
      if (c["id"] == "rel.y60_y64") bad = c["status"] == "bad-erratum";
    CHECK(bad);
  }

  TEST_CASE("relations suite with builtin errata") {
    Run r = cli({"--format", "json", "verify", "lemma39"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["bad-erratum"] == 0);
    Run raw = cli({"--no-errata", "verify", "generator-relations"});
    CHECK(raw.code == 1);
  }

  TEST_CASE("repeated runs are byte identical") {
    Run a = cli({"--format", "json", "verify", "group"});
    Run b = cli({"--format", "json", "verify", "group"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("nf reads polynomials from a file") {
    std::string path = "weylinv_test_nf.txt";
    {
      std::ofstream f(path);
      f << "t^3*h12^2\n";
    }
    Run r = cli({"nf", "--input", path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }
}
