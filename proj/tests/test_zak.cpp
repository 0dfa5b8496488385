#include <doctest.h>

#include "superstft/special.hpp"
#include "superstft/zak.hpp"

using namespace superstft;
using namespace superstft::zak;

TEST_SUITE("zak") {
  TEST_CASE("gaussian zak equals the truncated series") {
    const Evaluator g = Window::gaussian().shifted();
    for (double u : {0.0, 0.3})
      for (double e : {0.0, 2.0}) CHECK(std::abs(zak::zak(g, u, e) - zak_gaussian_series(u, e)) < 1e-14);
    // explicit sum of e^{-k^2/2}
    double s = 0.0;
    for (int k = -12; k <= 12; ++k) s += std::exp(-0.5 * k * k);
    CHECK(std::abs(zak_gaussian_series(0.0, 0.0) - s) < 1e-14);
  }

  TEST_CASE("quasi-periodicity") {
    const Evaluator f = Window::hermite(2).shifted(0.1, 0.3);
    const Complex a = zak::zak(f, 0.4, 1.1), b = zak::zak(f, 1.4, 1.1), c = zak::zak(f, 0.4, 1.1 + 2 * kPi);
    CHECK(std::abs(b - std::polar(1.0, 1.1) * a) < 1e-13);
    CHECK(std::abs(c - a) < 1e-13);
  }

  TEST_CASE("theta bound example") {
    double s = 0.0;
    for (int k = -12; k <= 12; ++k) s += std::exp(-0.5 * k * k);
    const auto b = theta_bound_check({2.0, 3}, 0.0, 0.0);
    CHECK(b.bound == doctest::Approx(27 * s).epsilon(1e-12));
    CHECK(b.bound == doctest::Approx(67.679).epsilon(1e-5));
    CHECK(b.value <= b.bound);
  }

  TEST_CASE("gaussian has a zak zero at the half period") {
    const auto v = frame_check(Window::gaussian().shifted(), 64);
    CHECK(v.verdict == Verdict::NotFrame);
    CHECK(v.zero_confirmed);
    CHECK(v.min_u == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(v.min_eta == doctest::Approx(kPi).epsilon(1e-6));
    CHECK(v.upper_bound == doctest::Approx(2.50662828804).epsilon(1e-10));
  }

  TEST_CASE("hermite(1) window is not a frame") {
    const auto v = frame_check(Window::hermite(1).shifted(), 64);
    CHECK(v.verdict != Verdict::Frame);
    CHECK(v.lower_bound < 1e-8);
  }

  TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::Frame) == "Frame");
    CHECK(to_string(Verdict::NotFrame) == "NotFrame");
    CHECK(to_string(Verdict::Inconclusive) == "Inconclusive");
  }

  TEST_CASE("wiener estimate of the gaussian") {
    double s = 0.0;
    for (int k = -12; k <= 12; ++k) {
      const double d = std::max(0.0, std::max(k - 0.0, -(k + 1.0)));
      s += std::exp(-0.5 * d * d);
    }
    CHECK(wiener_estimate(Window::gaussian().shifted()) == doctest::Approx(s).epsilon(1e-3));
  }

  TEST_CASE("resolution contract") {
    CHECK_THROWS(frame_check(Window::gaussian().shifted(), 1));
  }
}
