#include <doctest.h>

#include "superstft/approx_stft.hpp"
#include "superstft/transforms.hpp"

using namespace superstft;
using namespace superstft::approx_stft;

TEST_SUITE("approx") {
  TEST_CASE("approximating sequence evaluator") {
    const Window psi = Window::hermite(1);
    const superosc::SuperoscParams p{2.0, 3};
    const Evaluator e = approximating_evaluator(psi, p);
    CHECK(std::abs(e(0.4) - superosc::approximating_sequence(psi, p, 0.4)) < 1e-15);
  }

  TEST_CASE("hermite pair against quadrature") {
    for (int k = 0; k <= 2; ++k)
      for (int m = 0; m <= 2; ++m) {
        const Complex num =
            transforms::stft(Window::hermite(m).shifted(), Window::hermite(k), 0.6, -0.3, default_quadrature());
        CHECK(std::abs(stft_hermite_pair(k, m, 0.6, -0.3) - num) < 1e-11);
      }
  }

  TEST_CASE("calibration of the printed constant") {
    const superosc::SuperoscParams p{2.0, 3};
    for (int k = 0; k <= 3; ++k)
      CHECK(std::abs(stft_approx_hermite_closed(k, k, p, 0.3, 0.2) -
                     approx_hermite_calibration(k) * stft_approx_hermite_printed(k, k, p, 0.3, 0.2)) < 1e-11);
  }

  TEST_CASE("limit value") {
    const Complex lim = stft_approx_limit_gaussian(1.5, 0.2, 0.1);
    const double e10 = std::abs(stft_approx_hermite_closed(0, 0, {1.5, 10}, 0.2, 0.1) - lim);
    const double e30 = std::abs(stft_approx_hermite_closed(0, 0, {1.5, 30}, 0.2, 0.1) - lim);
    CHECK(e30 < e10);
  }
}
