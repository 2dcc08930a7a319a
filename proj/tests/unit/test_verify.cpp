#include <doctest.h>

#include "takeaway/verify.hpp"

using namespace takeaway;

TEST_CASE("claim registry") {
  const auto& list = claims();
  std::size_t acceptance = 0;
  for (const auto& c : list) acceptance += c.acceptance;
  CHECK(acceptance == 20);
  CHECK(list.front().id == "triangle-zero");
  CHECK(list[19].id == "h-family");
  CHECK_THROWS_AS(run_claim("no-such-claim", *std::make_unique<GrundyTable>()), InputError);
}

TEST_CASE("quick claims pass") {
  GrundyTable t;
  for (const char* id : {"triangle-zero", "kn-mod3", "cycles-loop", "ell-mex", "telescoping-figures",
                         "involution-figure"}) {
    CAPTURE(id);
    const auto r = run_claim(id, t);
    CHECK(r.status == ClaimStatus::Pass);
    CHECK(r.claim_id == id);
    CHECK_FALSE(r.statement.empty());
  }
}

TEST_CASE("budget exhaustion is reported as skipped") {
  GrundyTable t;
  VerifyOptions opts;
  opts.engine.node_budget = 5;
  const auto r = run_claim("wheel-small", t, opts);
  CHECK(r.status == ClaimStatus::Skipped);
  CHECK(r.reason.find("budget") != std::string::npos);
}

TEST_CASE("a broken golden directory fails the table claims") {
  GrundyTable t;
  VerifyOptions opts;
  opts.data_dir = "/nonexistent";
  CHECK(run_claim("fan-tables", t, opts).status == ClaimStatus::Skipped);
  CHECK(run_claim("telescoping-figures", t, opts).status == ClaimStatus::Fail);
}

TEST_CASE("a selection runs in order") {
  GrundyTable t;
  const std::vector<std::string> ids{"ell-mex", "triangle-zero"};
  const auto reports = verify_suite(ids, t);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].claim_id == "ell-mex");
  CHECK(reports[1].claim_id == "triangle-zero");
}
