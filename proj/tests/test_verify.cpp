#include <doctest.h>

#include <set>

#include "superstft/verify.hpp"

using namespace superstft;
using namespace superstft::verify;

TEST_SUITE("verify") {
  TEST_CASE("registry") {
    std::set<std::string> ids, criteria;
    for (const auto& c : registry()) {
      CHECK(ids.insert(c.id).second);
      CHECK(known_suite(c.suite));
      CHECK_FALSE(c.paper_anchor.empty());
      if (!c.criterion.empty()) criteria.insert(c.criterion);
    }
    for (int i = 1; i <= 13; ++i) CHECK(criteria.count("A" + std::to_string(i)) == 1);
    bool found = false;
    for (const auto& c : registry()) found = found || (c.id == "i_km_compact" && c.suite == "hermite");
    CHECK(found);
    CHECK_FALSE(known_suite("nope"));
    CHECK_THROWS_AS(run_suite("nope", Context{}), ContractError);
  }

  TEST_CASE("approx suite passes and serializes") {
    Context ctx;
    const auto recs = run_suite("approx", ctx);
    REQUIRE_FALSE(recs.empty());
    for (const auto& r : recs) CHECK_MESSAGE(r.pass, r.id);
    const auto j = to_json(recs, 42);
    CHECK(j["schema"] == 1);
    CHECK(j["seed"] == 42);
    for (const auto& r : j["suites"])
      for (const char* key : {"id", "paper_anchor", "params", "max_error", "tolerance", "pass"}) CHECK(r.contains(key));
  }

  TEST_CASE("gate compares reported values") {
    Record a;
    a.id = "x";
    a.reported = {1.0, 2.0};
    Record b = a;
    CHECK(quadrature_gate({a}, {b}).pass);
    b.reported[1] = 2.0 + 1e-6;
    const Record g = quadrature_gate({a}, {b});
    CHECK_FALSE(g.pass);
    CHECK(g.max_error == doctest::Approx(5e-7));
    b.reported.pop_back();
    CHECK_FALSE(quadrature_gate({a}, {b}).pass);
  }
}
