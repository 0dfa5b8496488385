#include <doctest.h>

#include "superstft/evolution.hpp"
#include "superstft/signals.hpp"

using namespace superstft;
using namespace superstft::evolution;

TEST_SUITE("evolution") {
  TEST_CASE("hermite evolution against external quadrature") {
    // mpmath, F h_1 = -i sqrt(2 pi) h_1
    const Complex ref(2.51930804219545084527, -1.42836451331221819858);
    const EvolutionPoint pt{0.7, 0.3, 0.1, 0.5};
    CHECK(std::abs(evolve_hermite(1, pt, default_quadrature()).value - ref) < 1e-10);
    CHECK(std::abs(evolve_numeric(Window::hermite(1), pt, default_quadrature()).value - ref) < 1e-9);
  }

  TEST_CASE("datum convention") {
    const EvolutionPoint pt{0.5, 0.0, 0.0, 1.0};
    const Complex datum = signals::time_frequency_shift(0.0, 1.0, Window::gaussian(), 0.5);
    CHECK(std::abs(normalized(evolve_gaussian_closed(pt)) - datum) < 1e-14);
    CHECK(std::abs(evolve_gaussian_closed(pt) - 2 * kPi * datum) < 1e-13);
  }

  TEST_CASE("modulus decays like |1+2it|^{-1/2}") {
    const double t = 1.7;
    const Complex v = evolve_gaussian_closed({0.4, t, 0.4, 0.0});
    CHECK(std::abs(v) == doctest::Approx(2 * kPi / std::sqrt(std::abs(Complex(1.0, 2 * t)))));
  }

  TEST_CASE("superoscillatory mode sum") {
    const superosc::SuperoscParams p{2.0, 8};
    CHECK(std::abs(evolve_superosc(p, 0.3, 0.0) - superosc::f_n(p, 0.3)) < 1e-12);
    Complex s = 0.0;
    const auto c = superosc::coefficients(p);
    for (int j = 0; j <= 8; ++j) {
      const double w = 1.0 - 2.0 * j / 8;
      s += c[j] * std::polar(1.0, w * 0.3 - w * w * 0.2);
    }
    CHECK(std::abs(evolve_superosc(p, 0.3, 0.2) - s) < 1e-12);
  }

  TEST_CASE("accuracy flag at long times") {
    const auto r = evolve_hermite(1, {0.0, 2000.0, 0.0, 0.0}, default_quadrature());
    CHECK(r.accuracy_flag);
    CHECK_FALSE(evolve_hermite(1, {0.0, 0.1, 0.0, 0.0}, default_quadrature()).accuracy_flag);
  }
}
