#include <doctest.h>

#include <cstdlib>

#include "superstft/quadrature.hpp"

using namespace superstft;

TEST_SUITE("quadrature") {
  TEST_CASE("gaussian integral both schemes") {
    for (Scheme s : {Scheme::CompositeSimpson, Scheme::GaussLegendrePanels}) {
      QuadratureSpec q;
      q.scheme = s;
      const Complex v = integrate([](double t) { return Complex(std::exp(-t * t)); }, -9.0, 9.0, q);
      CHECK(std::abs(v - std::sqrt(kPi)) < 1e-13);
    }
  }

  TEST_CASE("rules are increasing") {
    QuadratureSpec q;
    q.scheme = Scheme::GaussLegendrePanels;
    const Rule r = make_rule(-1.0, 2.0, q);
    for (std::size_t i = 1; i < r.x.size(); ++i) CHECK(r.x[i] > r.x[i - 1]);
  }

  TEST_CASE("truncation clip") {
    QuadratureSpec q;
    q.truncation_radius = 2.0;
    double lo = -5.0, hi = 1.0;
    clip(lo, hi, q);
    CHECK(lo == -2.0);
    CHECK(hi == 1.0);
  }

  TEST_CASE("doubling and validation") {
    QuadratureSpec q;
    CHECK(q.doubled().nodes_per_unit == 2 * q.nodes_per_unit);
    q.nodes_per_unit = 8;
    CHECK_THROWS_AS(q.validate(), ContractError);
  }

  TEST_CASE("non-finite samples") {
    CHECK_THROWS_AS(integrate([](double) { return Complex(NAN); }, 0.0, 1.0, QuadratureSpec{}),
                    NumericError);
  }

  TEST_CASE("environment override") {
    setenv("SUPERSTFT_QUAD_NODES", "96", 1);
    CHECK(default_nodes_per_unit() == 96);
    setenv("SUPERSTFT_QUAD_NODES", "4", 1);
    CHECK_THROWS(default_nodes_per_unit());
    unsetenv("SUPERSTFT_QUAD_NODES");
    CHECK(default_nodes_per_unit() == 64);
  }

  TEST_CASE("plane integral") {
    const Complex v = integrate_plane(
        [](double x, double y) { return Complex(std::exp(-x * x - 2 * y * y)); }, -8, 8, -8, 8,
        default_quadrature_2d());
    CHECK(std::abs(v - kPi / std::sqrt(2.0)) < 1e-11);
  }
}
