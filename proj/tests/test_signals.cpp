#include <doctest.h>

#include "superstft/signals.hpp"
#include "superstft/special.hpp"

using namespace superstft;
using namespace superstft::signals;

TEST_SUITE("signals") {
  TEST_CASE("windows") {
    const Window g = Window::gaussian();
    CHECK(std::abs(g(0.0) - 1.0) < 1e-15);
    CHECK(g.norm_sq() == doctest::Approx(std::sqrt(kPi)));
    const Window h = Window::hermite(2);
    CHECK(std::abs(h(0.5) - special::hermite_function(2, 0.5)) < 1e-15);
    CHECK(std::abs(h(h.decay_radius())) < 1e-15);
    CHECK_THROWS(Window::hermite(-1));
    CHECK_THROWS(Window::custom([](double) { return Complex(1.0); }, -1.0));
  }

  TEST_CASE("time frequency shift") {
    const Window g = Window::gaussian();
    const Complex v = time_frequency_shift(0.5, 2.0, g, 1.0);
    CHECK(std::abs(v - std::polar(std::exp(-0.125), 2.0)) < 1e-15);
  }

  TEST_CASE("signal evaluation") {
    const Window g = Window::hermite(1);
    const superosc::SuperoscParams p{2.0, 4};
    const Signal s = build_signal(g, 0.3, p);
    CHECK(std::abs(s(0.9) - superosc::f_n(p, 0.9) * g(0.6)) < 1e-14);
    const Signal l = build_limit_signal(g, 0.3, 2.0);
    CHECK(std::abs(l(0.9) - std::polar(1.0, 1.8) * g(0.6)) < 1e-14);
  }

  TEST_CASE("closed norm agrees with quadrature") {
    const QuadratureSpec q = default_quadrature();
    for (const Window& g : {Window::gaussian(), Window::hermite(2)})
      for (double x : {0.0, 0.5}) {
        const superosc::SuperoscParams p{2.0, 4};
        const NormResult r = signal_norm_sq_closed(g, x, p);
        CHECK(r.provenance == Provenance::Closed);
        const double num = signal_norm_sq_numeric(build_signal(g, x, p), q);
        CHECK(r.value == doctest::Approx(num).epsilon(1e-10));
      }
    const Window c = Window::custom([](double t) { return Complex(std::exp(-t * t)); }, 7.0);
    CHECK(signal_norm_sq_closed(c, 0.0, {2.0, 2}).provenance == Provenance::Quadrature);
  }
}
