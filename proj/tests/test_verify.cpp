#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "psiell/errors.hpp"
#include "psiell/psi.hpp"
#include "psiell/verify.hpp"

using namespace psiell;

TEST_CASE("grids") {
  const auto u = grid_points({0.0, 1.0, 5, GridLaw::uniform});
  CHECK(u == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto g = grid_points({1e-3, 1e3, 7, GridLaw::logarithmic});
  CHECK(g.front() == 1e-3);
  CHECK(g.back() == 1e3);
  CHECK(g[3] == doctest::Approx(1.0).epsilon(1e-15));
  const auto e = grid_points({0.0, 1.0, 100, GridLaw::endpoint_refined});
  CHECK(e.size() == 100);
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] > e[i - 1]);
  CHECK(e[24] < 0.01);
  CHECK(e[74] < 0.99);
  CHECK(e[75] >= 0.99);
  CHECK_THROWS_AS(grid_points({1.0, 0.0, 5, GridLaw::uniform}), DomainError);
  CHECK_THROWS_AS(grid_points({0.0, 1.0, 5, GridLaw::logarithmic}), DomainError);
  CHECK_THROWS_AS(grid_points({0.0, 1.0, 1, GridLaw::uniform}), DomainError);
}

TEST_CASE("registry ids are unique") {
  std::set<std::string> ids;
  for (const ClaimInfo& c : claim_registry()) CHECK(ids.insert(c.id).second);
}

TEST_CASE("filter") {
  CHECK(claims_matching("thm1.1").size() == 2);
  CHECK(claims_matching("").size() == claim_registry().size());
  CHECK_THROWS_AS(claims_matching("nonexistent"), LookupError);
  CHECK_THROWS_AS(run_check("nonexistent"), LookupError);
}

TEST_CASE("full run covers the registry") {
  const auto reports = run_all();
  REQUIRE(reports.size() == claim_registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].claim_id == claim_registry()[i].id);
}

TEST_CASE("runs are deterministic") {
  VerifyOptions opts;
  opts.points = 300;
  const auto ids = claims_matching("thm");
  const auto a = run_checks(ids, opts);
  const auto b = run_checks(ids, opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json_line(a[i]) == to_json_line(b[i]));
}

TEST_CASE("a corrupted psi is caught") {
  VerifyOptions opts;
  opts.psi = [](const Modulus& m) { return psi(m) * (1.0 + 1e-6); };
  for (const CheckReport& r : run_checks(claims_matching("thm1.1"), opts)) {
    CAPTURE(r.claim_id);
    CHECK_FALSE(passed(r));
  }
}

TEST_CASE("identity claims pass") {
  for (const char* id : {"legendre-relation", "thm1.1-identity-1", "remark3.3-reciprocal"}) {
    CAPTURE(id);
    CHECK(passed(run_check(id)));
  }
}

TEST_CASE("custom grid") {
  const CheckReport r = run_check("thm3.1-increasing", GridSpec{0.1, 0.9, 50, GridLaw::uniform});
  CHECK(r.points_tested == 49);
  CHECK(passed(r));
}

TEST_CASE("report serialisation") {
  const CheckReport r = run_check("thm1.1-identity-1");
  const std::string json = to_json_line(r);
  CHECK(json.find("\"claim_id\":\"thm1.1-identity-1\"") != std::string::npos);
  CHECK(to_text_line(r, 6).rfind("pass thm1.1-identity-1", 0) == 0);
  CHECK(to_csv_line(r, 6).rfind("thm1.1-identity-1,pass,", 0) == 0);
}
