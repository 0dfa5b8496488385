#include "superstft/kernels.hpp"

#include <cmath>

#include "superstft/special.hpp"
#include "superstft/transforms.hpp"

namespace superstft::kernels {

using special::complex_hermite_2d;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrtPi = std::sqrt(kPi);

double pow_sqrt2(int k) { return std::pow(2.0, 0.5 * k); }

}  // namespace

Complex gabor_kernel_numeric(const Window& g, const TFQuadruple& q, const QuadratureSpec& quad) {
  const double r = g.decay_radius();
  const double lo = std::max(q.x, q.u) - r, hi = std::min(q.x, q.u) + r;
  return integrate(
      [&](double t) {
        return std::polar(1.0, t * (q.omega - q.eta)) * g(t - q.x) * std::conj(g(t - q.u));
      },
      lo, hi, quad);
}

Complex gabor_kernel_gaussian(const TFQuadruple& q) {
  const double du = q.u - q.x, dw = q.eta - q.omega;
  return kSqrtPi * std::exp(Complex(-0.25 * (du * du + dw * dw),
                                    0.5 * (q.u + q.x) * (q.omega - q.eta)));
}

Complex gabor_kernel_hermite_printed(int n, const TFQuadruple& q) {
  const double du = q.x - q.u, dw = q.omega - q.eta;
  return gabor_kernel_gaussian(q) * special::laguerre(n, 0.5 * (du * du + dw * dw));
}

double hermite_kernel_calibration(int n) { return std::ldexp(special::factorial(n), n); }

Complex gabor_kernel_hermite(int n, const TFQuadruple& q) {
  return hermite_kernel_calibration(n) * gabor_kernel_hermite_printed(n, q);
}

Complex gabor_kernel(const Window& g, const TFQuadruple& q, const QuadratureSpec& quad) {
  switch (g.kind()) {
    case Window::Kind::Gaussian: return gabor_kernel_gaussian(q);
    case Window::Kind::Hermite: return gabor_kernel_hermite(g.order(), q);
    default: return gabor_kernel_numeric(g, q, quad);
  }
}

Complex stft_superosc_closed(const Window& g, double x, const SuperoscParams& p, double u,
                             double eta, const QuadratureSpec& quad) {
  return superosc::supershift_probe(
      [&](double w) { return gabor_kernel(g, {x, w, u, eta}, quad); }, p);
}

Complex stft_superosc_limit(const Window& g, double x, double a, double u, double eta,
                            const QuadratureSpec& quad) {
  return gabor_kernel(g, {x, a, u, eta}, quad);
}

Complex stft_superosc_cross_printed(int k, int m, double x, const SuperoscParams& p, double u,
                                    double eta) {
  const Complex pre = kSqrtPi * sign_pow(m) * pow_sqrt2(k + m) *
                      std::exp(Complex(-0.25 * (x - u) * (x - u), -0.5 * (x + u) * eta));
  const Complex sum = superosc::supershift_probe(
      [&](double w) {
        const Complex al = Complex(u - x, w - eta) / kSqrt2;
        return std::exp(Complex(-0.25 * (w - eta) * (w - eta), 0.5 * (u + x) * w)) *
               complex_hermite_2d(k, m, al, std::conj(al));
      },
      p);
  return pre * sum;
}

double cross_window_calibration(int k, int m) { return sign_pow(k + m); }

Complex stft_superosc_cross(int k, int m, double x, const SuperoscParams& p, double u,
                            double eta) {
  return cross_window_calibration(k, m) * stft_superosc_cross_printed(k, m, x, p, u, eta);
}

Complex stft_superosc_cross_via_ikm(int k, int m, double x, const SuperoscParams& p, double u,
                                    double eta) {
  return superosc::supershift_probe(
      [&](double w) { return hermite_overlap_closed(m, k, x, u, w - eta); }, p);
}

Complex stft_superosc_limit_cross_printed(int k, int m, double x, double a, double u,
                                          double eta) {
  const double l = a - eta;
  const Complex al = Complex(u - x, l) / kSqrt2;
  return kSqrtPi * sign_pow(m) * pow_sqrt2(k + m) *
         std::exp(Complex(-0.25 * l * l - 0.25 * (x - u) * (x - u), 0.5 * (x + u) * l)) *
         complex_hermite_2d(k, m, al, std::conj(al));
}

Complex stft_superosc_limit_cross(int k, int m, double x, double a, double u, double eta) {
  return cross_window_calibration(k, m) * stft_superosc_limit_cross_printed(k, m, x, a, u, eta);
}

Complex fock_kernel(Complex z, Complex w) { return std::exp(z * std::conj(w)) / kPi; }

Complex normalized_fock_kernel(Complex w, Complex z) {
  return std::exp(z * std::conj(w) - 0.5 * std::norm(w)) / kSqrtPi;
}

namespace {

Complex fock_form(double x, const SuperoscParams& p, double u, double eta, bool printed) {
  const double s = u + x;
  const Complex pp(eta, -s);
  const Complex minv = std::exp(Complex(-0.25 * eta * eta - 0.25 * s * s, -0.5 * s * eta));
  const Complex sum = superosc::supershift_probe(
      [&](double w) {
        return printed ? normalized_fock_kernel(0.5 * w, std::conj(pp))
                       : normalized_fock_kernel(w / kSqrt2, std::conj(pp) / kSqrt2);
      },
      p);
  return kPi * std::exp(u * x) * minv * sum;
}

}  // namespace

Complex stft_superosc_fock_form(double x, const SuperoscParams& p, double u, double eta) {
  return fock_form(x, p, u, eta, false);
}

Complex stft_superosc_fock_form_printed(double x, const SuperoscParams& p, double u, double eta) {
  return fock_form(x, p, u, eta, true);
}

double norm_sq_closed_gaussian(double x, const SuperoscParams& p) {
  const auto c = superosc::coefficients(p);
  const double n = p.n;
  Complex s = 0.0;
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.n; ++k) {
      const double d = j - k;
      s += c[j] * c[k] * std::exp(Complex(-d * d / (n * n), -2.0 * x * d / n));
    }
  return kPi * s.real();
}

double phi_na_norm(double x, const SuperoscParams& p, const QuadratureSpec& quad) {
  const auto c = superosc::coefficients(p);
  const double n = p.n;
  // |phi|^2 e^{-s^2} peaks near s = 2 and is below 1e-17 of the peak outside [-8, 12]
  const Complex s = integrate(
      [&](double t) {
        Complex phi = 0.0;
        for (int l = 0; l <= p.n; ++l)
          phi += c[l] * std::exp(Complex(-2.0 * l * l / (n * n) + 2.0 * l * t / n,
                                         -2.0 * l * x / n));
        return std::norm(phi) * std::exp(-t * t);
      },
      -8.0, 12.0, quad);
  return s.real() / kSqrtPi;
}

double norm_sq_closed_hermite(int k, int m, double x, const SuperoscParams& p) {
  const auto c = superosc::coefficients(p);
  const double n = p.n;
  Complex s = 0.0;
  double scale = 0.0;
  for (int a = 0; a <= p.n; ++a)
    for (int b = 0; b <= p.n; ++b) {
      const double d = a - b;
      Complex h;
      if (d == 0.0) {
        h = sign_pow(m) * special::factorial(m);
      } else {
        const Complex z = kSqrt2 * d / n;
        h = complex_hermite_2d(m, m, z, z);
      }
      const Complex term = c[a] * c[b] * std::exp(Complex(-d * d / (n * n), 2.0 * d * x / n)) * h;
      s += term;
      scale += std::abs(term);
    }
  if (std::abs(s.imag()) > 1e-12 * std::max(1.0, scale))
    throw NumericError("norm_sq_closed_hermite: imaginary residue above 1e-12");
  return sign_pow(m) * std::ldexp(special::factorial(k), m + k) * kPi * s.real();
}

Complex hermite_convolution_closed(int k, int m, double x, double u, double lambda) {
  const Complex z1 = Complex(u - x, -lambda) / kSqrt2, z2 = Complex(u - x, lambda) / kSqrt2;
  return kSqrtPi * ipow(m - k) * pow_sqrt2(k + m) *
         std::exp(Complex(-0.25 * lambda * lambda - 0.25 * (x - u) * (x - u),
                          0.5 * lambda * (x + u))) *
         complex_hermite_2d(k, m, z1, z2);
}

Complex hermite_convolution_printed(int k, int m, double x, double u, double lambda) {
  const Complex z1 = Complex(u - x, lambda) / kSqrt2, z2 = Complex(u - x, -lambda) / kSqrt2;
  return kSqrtPi * ipow(m - k) * pow_sqrt2(k + m) *
         std::exp(Complex(-0.25 * lambda * lambda - 0.25 * (x - u) * (x - u),
                          0.5 * lambda * (x + u))) *
         complex_hermite_2d(k, m, z1, z2);
}

Complex hermite_convolution_origin(int k, int m, double lambda) {
  const Complex z = lambda / kSqrt2;
  return kSqrtPi * pow_sqrt2(k + m) * std::exp(-0.25 * lambda * lambda) *
         complex_hermite_2d(k, m, z, z);
}

Complex hermite_convolution_same_shift(int k, int m, double x, double lambda) {
  return std::polar(1.0, lambda * x) * hermite_convolution_origin(k, m, lambda);
}

Complex i_km_series(int k, int m, Complex x, Complex u, Complex lambda) {
  const Complex z = (lambda + kI * (x - u)) / kSqrt2;
  Complex s = 0.0;
  for (int l = 0; l <= m; ++l)
    s += pow_sqrt2(k + l) * ipow(k + l) * special::binomial(m, l) *
         cpow(2.0 * (x - u), m - l) * complex_hermite_2d(k, l, z, z);
  return s;
}

Complex i_km_closed(int k, int m, Complex x, Complex u, Complex lambda) {
  return sign_pow(m) * pow_sqrt2(k + m) *
         complex_hermite_2d(k, m, (u - x - kI * lambda) / kSqrt2, (u - x + kI * lambda) / kSqrt2);
}

Complex i_km_closed_printed(int k, int m, Complex x, Complex u, Complex lambda) {
  return sign_pow(m) * pow_sqrt2(k + m) *
         complex_hermite_2d(k, m, (u - x + kI * lambda) / kSqrt2, (u - x - kI * lambda) / kSqrt2);
}

Complex hermite_overlap_closed(int k, int m, double x, double u, double lambda) {
  return kSqrtPi *
         std::exp(Complex(-0.25 * lambda * lambda - 0.25 * (x - u) * (x - u),
                          0.5 * lambda * (x + u))) *
         i_km_closed(k, m, x, u, lambda);
}

Complex fock_basis(int m, Complex z) {
  return cpow(z, m) / std::sqrt(special::factorial(m) * kPi);
}

Complex weyl_action_on_basis(double a, double b, int m, Complex z) {
  const Complex c(a, b);
  return std::exp(Complex(-0.25 * (a * a + b * b), 0.5 * a * b)) * std::exp(z * c / kSqrt2) *
         cpow(z - std::conj(c) / kSqrt2, m) / std::sqrt(special::factorial(m) * kPi);
}

std::pair<Complex, Complex> generating_sum_check(double x, Complex u, Complex v, double lambda,
                                                 int K) {
  Complex lhs = 0.0;
  for (int k = 0; k <= K; ++k)
    for (int m = 0; m <= K; ++m)
      lhs += cpow(u, k) * cpow(v, m) /
             (pow_sqrt2(k + m) * special::factorial(k) * special::factorial(m)) *
             hermite_convolution_same_shift(k, m, x, lambda);
  const Complex rhs =
      kSqrtPi * std::exp(-0.25 * lambda * lambda + lambda * (kI * x + (u + v) / kSqrt2) - u * v);
  return {lhs, rhs};
}

std::pair<Complex, Complex> hermite_product_generating_check(double x, Complex u, Complex v,
                                                             double lambda, int K) {
  Complex lhs = 0.0;
  for (int k = 0; k <= K; ++k)
    for (int m = 0; m <= K; ++m)
      lhs += cpow(u, k) * cpow(v, m) /
             (pow_sqrt2(k + m) * special::factorial(k) * special::factorial(m)) *
             minus_ipow(k + m) * special::hermite_function(k, lambda - x) *
             special::hermite_function(m, lambda - x);
  const double d = x - lambda;
  const Complex rhs = std::exp(-u * v - d * d + 0.5 * (u + v) * (u + v) + kSqrt2 * kI * d * (u + v));
  return {lhs, rhs};
}

Complex hermite_product_generating_printed(double x, Complex u, Complex v, double lambda) {
  return 2.0 * kPi * hermite_product_generating_check(x, u, v, lambda, 0).second;
}

std::pair<Complex, Complex> complex_hermite_generating_check(Complex z, Complex w, Complex u,
                                                             Complex v, int K) {
  Complex lhs = 0.0;
  for (int m = 0; m <= K; ++m)
    for (int n = 0; n <= K; ++n)
      lhs += complex_hermite_2d(m, n, z, w) * cpow(u, m) * cpow(v, n) /
             (special::factorial(m) * special::factorial(n));
  return {lhs, std::exp(u * w + v * z - u * v)};
}

Complex complex_hermite_generating_printed(Complex z, Complex w, Complex u, Complex v) {
  return std::exp(u * z + v * w - u * v);
}

Complex stft_integral_representation(const Window& g, double x, double y, const SuperoscParams& p,
                                     const QuadratureSpec& quad2d, double radius) {
  const Complex gy = g(y - x);
  if (std::abs(gy) < 1e-300) throw DomainError("stft_integral_representation: g(y-x) = 0");
  const auto c = superosc::coefficients(p);
  const auto w = superosc::frequencies(p.n);
  const QuadratureSpec q1 = default_quadrature();
  const Complex s = integrate_plane(
      [&](double u, double eta) {
        Complex phi = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) phi += c[j] * gabor_kernel(g, {x, w[j], u, eta}, q1);
        return phi * std::polar(1.0, eta * y) * g(y - u);
      },
      std::min(x, y) - radius, std::max(x, y) + radius, -1.0 - radius, 1.0 + radius, quad2d);
  return s / (transforms::kMoyalConstant * gy * g.norm_sq());
}

}  // namespace superstft::kernels
