#include <doctest.h>

#include "superstft/kernels.hpp"
#include "superstft/signals.hpp"
#include "superstft/transforms.hpp"

using namespace superstft;
using namespace superstft::kernels;

// reference values from mpmath quadrature (30 digits)

TEST_SUITE("kernels") {
  TEST_CASE("hermite gabor kernel against external quadrature") {
    const TFQuadruple q{0.2, -0.5, 0.7, 0.3};
    const Complex ref(2.22041746325612775925, -0.835771465005362100436);
    CHECK(std::abs(gabor_kernel_hermite(2, q) - ref) < 1e-12);
    CHECK(std::abs(gabor_kernel_hermite_printed(2, q) * hermite_kernel_calibration(2) - ref) < 1e-12);
  }

  TEST_CASE("gaussian gabor kernel on the diagonal") {
    CHECK(std::abs(gabor_kernel_gaussian({0.4, 1.0, 0.4, 1.0}) - std::sqrt(kPi)) < 1e-14);
  }

  TEST_CASE("cross-window STFT against external quadrature") {
    const superosc::SuperoscParams p{2.0, 2};
    const Complex ref(-2.39370320101522760080, 0.962958163419666402607);
    CHECK(std::abs(stft_superosc_cross(1, 2, 0.5, p, 0.3, -0.4) - ref) < 1e-12);
    CHECK(std::abs(stft_superosc_cross_via_ikm(1, 2, 0.5, p, 0.3, -0.4) - ref) < 1e-12);
  }

  TEST_CASE("hermite overlap against external quadrature") {
    const Complex ref(4.34116562796663315302, 10.5806872750530278376);
    CHECK(std::abs(hermite_overlap_closed(2, 3, 0.4, -0.2, 1.1) - ref) < 1e-11);
  }

  TEST_CASE("gaussian norm against external quadrature") {
    CHECK(norm_sq_closed_gaussian(0.5, {2.0, 4}) == doctest::Approx(6.12108582311571115).epsilon(1e-13));
  }

  TEST_CASE("hermite norm reduces to the gaussian one") {
    const superosc::SuperoscParams p{1.5, 3};
    CHECK(norm_sq_closed_hermite(0, 0, 0.2, p) ==
          doctest::Approx(norm_sq_closed_gaussian(0.2, p)).epsilon(1e-12));
  }

  TEST_CASE("I_km series and closed form") {
    const Complex x(0.3, -0.2), u(-0.5, 0.1), l(0.9, 0.4);
    for (int k = 0; k <= 3; ++k)
      for (int m = 0; m <= 3; ++m)
        CHECK(std::abs(i_km_series(k, m, x, u, l) - i_km_closed(k, m, x, u, l)) <
              1e-12 * std::max(1.0, std::abs(i_km_closed(k, m, x, u, l))));
  }

  TEST_CASE("convolution at the origin") {
    for (int k = 0; k <= 3; ++k)
      for (int m = 0; m <= 3; ++m)
        CHECK(std::abs(hermite_convolution_origin(k, m, 0.8) - hermite_convolution_closed(k, m, 0, 0, 0.8)) <
              1e-11);
    CHECK(std::abs(hermite_convolution_same_shift(2, 1, 0.4, 0.9) -
                   hermite_convolution_closed(2, 1, 0.4, 0.4, 0.9)) < 1e-11);
  }

  TEST_CASE("fock kernel") {
    const Complex z(0.3, 0.5), w(-0.2, 0.1);
    CHECK(std::abs(fock_kernel(z, w) - std::exp(z * std::conj(w)) / kPi) < 1e-15);
    CHECK(std::abs(fock_basis(2, z) - z * z / std::sqrt(2 * kPi)) < 1e-15);
  }

  TEST_CASE("supershift limit is approached") {
    const Window g = Window::hermite(1);
    const Complex lim = stft_superosc_limit(g, 0.0, 1.5, 0.2, 0.1);
    const double e10 = std::abs(stft_superosc_closed(g, 0.0, {1.5, 10}, 0.2, 0.1) - lim);
    const double e80 = std::abs(stft_superosc_closed(g, 0.0, {1.5, 80}, 0.2, 0.1) - lim);
    CHECK(e80 < 0.5 * e10);
  }
}
