#include <doctest.h>

#include <sstream>

#include "superstft/core.hpp"
#include "superstft/io.hpp"

using namespace superstft;
using namespace superstft::io;

TEST_SUITE("io") {
  TEST_CASE("axis syntax") {
    const auto a = parse_axis("-3:3:61");
    REQUIRE(a.size() == 61);
    CHECK(a.front() == -3.0);
    CHECK(a.back() == 3.0);
    CHECK(a[30] == doctest::Approx(0.0));
    CHECK(parse_axis("2:2:1").size() == 1);
    CHECK_THROWS(parse_axis("1:0:5"));
    CHECK_THROWS(parse_axis("0:1:0"));
    CHECK_THROWS(parse_axis("0:1"));
    CHECK_THROWS(parse_axis("a:1:3"));
    CHECK_THROWS(parse_axis("0:1:1"));
  }

  TEST_CASE("round trip") {
    for (double v : {0.1, -1.0 / 3.0, 6.02214076e23, 5e-324, 2.718281828459045})
      CHECK(parse_double(format_double(v)) == v);
  }

  TEST_CASE("csv layout") {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"u", "eta"});
    w.row({0.5, -1.25});
    CHECK(os.str() == "u,eta\n0.5,-1.25\n");
  }

  TEST_CASE("split") {
    const auto s = split("a,b,,c", ',');
    REQUIRE(s.size() == 4);
    CHECK(s[2].empty());
  }
}
