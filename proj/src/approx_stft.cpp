#include "superstft/approx_stft.hpp"

#include <cmath>

#include "superstft/special.hpp"
#include "superstft/transforms.hpp"

namespace superstft::approx_stft {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

Evaluator approximating_evaluator(const Window& psi, const SuperoscParams& p, double shift) {
  p.validate();
  const double r = psi.decay_radius();
  return {[psi, p, shift](double t) { return superosc::approximating_sequence(psi, p, t - shift); },
          shift - 1.0 - r, shift + 1.0 + r};
}

Complex stft_approx_via_ambiguity(const Window& g, const SuperoscParams& p, double u, double eta,
                                  const QuadratureSpec& q) {
  const Complex s = superosc::supershift_probe(
      [&](double w) {
        return std::polar(1.0, 0.5 * eta * w) * transforms::ambiguity(g, u + w, eta, q);
      },
      p);
  return std::polar(1.0, -0.5 * u * eta) * s;
}

namespace {

Complex approx_sum(int k, int m, const SuperoscParams& p, double u, double eta, bool printed) {
  return superosc::supershift_probe(
      [&](double w) {
        const Complex z = Complex(u + w, eta) / kSqrt2;
        const Complex h = printed ? special::complex_hermite_2d(k, m, z, std::conj(z))
                                  : special::complex_hermite_2d(k, m, std::conj(z), z);
        return std::exp(-0.25 * w * w - 0.5 * Complex(u, -eta) * w) * h;
      },
      p);
}

Complex envelope(double u, double eta) {
  return std::exp(Complex(-0.25 * (u * u + eta * eta), -0.5 * u * eta));
}

}  // namespace

Complex stft_approx_hermite_closed(int k, int m, const SuperoscParams& p, double u, double eta) {
  return std::sqrt(kPi) * sign_pow(k) * std::pow(2.0, 0.5 * (k + m)) * envelope(u, eta) *
         approx_sum(k, m, p, u, eta, false);
}

Complex stft_approx_hermite_printed(int k, int m, const SuperoscParams& p, double u, double eta) {
  return std::sqrt(kPi / special::factorial(k)) * std::pow(2.0, 0.5 * k) * envelope(u, eta) *
         approx_sum(k, m, p, u, eta, true);
}

double approx_hermite_calibration(int k) {
  return sign_pow(k) * std::pow(2.0, 0.5 * k) * std::sqrt(special::factorial(k));
}

Complex stft_hermite_pair(int k, int m, double u, double eta) {
  const Complex z = Complex(u, eta) / kSqrt2;
  return std::sqrt(kPi) * sign_pow(k) * std::pow(2.0, 0.5 * (k + m)) * envelope(u, eta) *
         special::complex_hermite_2d(k, m, std::conj(z), z);
}

Complex stft_approx_limit_gaussian(double a, double u, double eta) {
  return std::sqrt(kPi) * std::exp(-0.25 * (u * u + eta * eta + a * a) - 0.5 * Complex(u, -eta) * a) *
         std::polar(1.0, -0.5 * u * eta);
}

}  // namespace superstft::approx_stft
