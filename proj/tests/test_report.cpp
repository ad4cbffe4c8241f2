#include <doctest.h>
#include <json.hpp>

#include "weylinv/report.hpp"

using namespace weylinv;

namespace {

Report sample() {
  Report r;
  r.suite = "demo";
  r.errata_source = "builtin";
  CheckResult a;
  a.id = "a";
  a.citation = "first";
  r.checks.push_back(a);
  CheckResult b;
  b.id = "b";
  b.citation = "second";
  b.status = Status::PatchedPass;
  b.residual = "x4*x8";
  b.residual_terms = 1;
  b.erratum = AppliedErratum{"x4^3", "scalar", "oracle"};
  r.checks.push_back(b);
  r.info.emplace_back("note", "value");
  return r;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("empty report") {
    Report r;
    CHECK(r.summary().total() == 0);
    CHECK(r.exit_code() == 0);
    auto j = nlohmann::json::parse(emit_json(r));
    CHECK(j["summary"]["total"] == 0);
    CHECK(j["checks"].empty());
  }

  TEST_CASE("status names and failures") {
    CHECK(status_name(Status::PatchedPass) == "patched-pass");
    CHECK(status_name(Status::BadErratum) == "bad-erratum");
    CHECK(is_failure(Status::Fail));
    CHECK(is_failure(Status::BadErratum));
    CHECK_FALSE(is_failure(Status::PatchedPass));
    CHECK_FALSE(is_failure(Status::Skipped));
  }

  TEST_CASE("patched checks keep exit code zero") {
    Report r = sample();
    CHECK(r.exit_code() == 0);
    CHECK(r.summary().pass == 1);
    CHECK(r.summary().patched_pass == 1);
    CHECK(r.find("b")->erratum->author == "oracle");
    CHECK(r.find("zzz") == nullptr);
    std::string text = emit_text(r);
    CHECK(text.find("second") != std::string::npos);
    CHECK(text.find("scalar") != std::string::npos);
    CHECK(text.find("patched-pass") != std::string::npos);
  }

  TEST_CASE("a failing check gives exit code one") {
    Report r = sample();
    CheckResult c;
    c.id = "c";
    c.status = Status::Fail;
    c.residual = "t";
    c.residual_terms = 1;
    r.checks.push_back(c);
    CHECK(r.exit_code() == 1);
    auto j = nlohmann::json::parse(emit_json(r));
    CHECK(j["checks"][2]["residual"] == "t");
    CHECK(j["summary"]["fail"] == 1);
  }

  TEST_CASE("json layout") {
    auto j = nlohmann::json::parse(emit_json(sample()));
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["tool"] == "weylinv");
    CHECK(j["suite"] == "demo");
    CHECK(j["prime"] == 3);
    CHECK(j["errata_source"] == "builtin");
    CHECK(j["checks"][1]["status"] == "patched-pass");
    CHECK(j["checks"][1]["erratum"]["corrected"] == "x4^3");
    CHECK(j["summary"]["patched-pass"] == 1);
    CHECK_FALSE(j["checks"][0].contains("elapsed_ms"));
    EmitOptions timed;
    timed.timing = true;
    CHECK(nlohmann::json::parse(emit_json(sample(), timed))["checks"][0].contains("elapsed_ms"));
  }

  TEST_CASE("output is deterministic") {
    CHECK(emit_json(sample()) == emit_json(sample()));
    CHECK(emit_text(sample()) == emit_text(sample()));
  }
}
