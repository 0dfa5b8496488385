#include <doctest.h>

#include "superstft/transforms.hpp"

using namespace superstft;
using namespace superstft::transforms;

namespace {
// V_phi(h0)(x, w) = sqrt(pi) e^{-(x^2+w^2)/4} e^{-ixw/2}
Complex stft_h0(double x, double w) {
  return std::sqrt(kPi) * std::exp(-(x * x + w * w) / 4) * std::polar(1.0, -x * w / 2);
}
}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("fourier of the gaussian") {
    const Complex v = fourier(Window::gaussian().shifted(), 1.0, default_quadrature());
    CHECK(std::abs(v - std::sqrt(2 * kPi) * std::exp(-0.5)) < 1e-10);
  }

  TEST_CASE("stft of the gaussian") {
    const Window g = Window::gaussian();
    for (double x : {-1.0, 0.3})
      for (double w : {0.0, 1.7})
        CHECK(std::abs(stft(g.shifted(), g, x, w, default_quadrature()) - stft_h0(x, w)) < 1e-12);
  }

  TEST_CASE("grid matches pointwise stft") {
    const Window g = Window::hermite(1);
    const Evaluator f = Window::hermite(2).shifted(0.2, 0.5);
    const auto u = linspace(-2, 2, 7), e = linspace(-3, 3, 9);
    const auto grid = stft_grid(f, g, u, e, default_quadrature());
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        CHECK(std::abs(grid.at(i, j) - stft(f, g, u[i], e[j], default_quadrature())) < 1e-11);
  }

  TEST_CASE("spectrogram normalizes by the window norm") {
    const Window g = Window::gaussian();
    const auto u = linspace(0, 0, 1);
    const auto grid = stft_grid(g.shifted(), g, u, u, default_quadrature());
    const auto s = spectrogram(grid, g);
    CHECK(s.at(0, 0) == doctest::Approx(kPi / std::sqrt(kPi)));
  }

  TEST_CASE("interpolation outside the grid") {
    ComplexGrid g(linspace(0, 1, 2), linspace(0, 1, 2));
    CHECK_THROWS_AS(g.interpolate(2.0, 0.5), CoverageError);
  }

  TEST_CASE("reconstruction reports truncation") {
    const Window g = Window::gaussian();
    const auto axis = linspace(-2, 2, 33);
    const auto grid = stft_grid(g.shifted(), g, axis, axis, default_quadrature());
    try {
      reconstruct(grid, g, 0.0, default_quadrature_2d());
      FAIL("expected CoverageError");
    } catch (const CoverageError& e) {
      CHECK(e.tail_bound > 0.0);
    }
  }

  TEST_CASE("ambiguity of the gaussian") {
    const Complex a = ambiguity(Window::gaussian(), 0.4, -0.9, default_quadrature());
    CHECK(std::abs(a - std::sqrt(kPi) * std::exp(-(0.16 + 0.81) / 4)) < 1e-12);
  }

  TEST_CASE("bargmann kernel reproduces monomials") {
    const Complex z(0.4, 0.2);
    const Complex v = bargmann(Window::hermite(2).shifted(), z, default_quadrature());
    CHECK(std::abs(v - std::pow(kPi, -0.25) * 2.0 * z * z) < 1e-12);
  }

  TEST_CASE("convolution of gaussians") {
    const Evaluator g = Window::gaussian().shifted();
    const Complex v = convolve(g, g, 1.2, default_quadrature());
    CHECK(std::abs(v - std::sqrt(kPi) * std::exp(-0.36)) < 1e-13);
  }
}
