#include "superstft/special.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace superstft::special {

namespace {

const std::array<double, 171>& log_fact_table() {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 0.0;
    for (int i = 1; i < 171; ++i) t[i] = t[i - 1] + std::log(double(i));
    return t;
  }();
  return table;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n < 171) return log_fact_table()[n];
  return std::lgamma(n + 1.0);
}

double factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double hermite_polynomial(int n, double t) {
  if (n < 0) throw DomainError("hermite_polynomial: n < 0");
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * t;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * t * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double hermite_function(int n, double t) {
  return std::exp(-0.5 * t * t) * hermite_polynomial(n, t);
}

double hermite_norm_sq(int n) {
  return std::ldexp(factorial(n), n) * std::sqrt(kPi);
}

double generalized_laguerre(int n, int alpha, double x) {
  if (n < 0 || alpha < 0) throw DomainError("generalized_laguerre: negative index");
  double l0 = 1.0;
  if (n == 0) return l0;
  double l1 = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

double laguerre(int n, double x) { return generalized_laguerre(n, 0, x); }

Complex complex_hermite_2d(int k, int l, Complex z, Complex w) {
  if (k < 0 || l < 0) throw DomainError("complex_hermite_2d: negative order");
  if (k > kMaxComplexHermite || l > kMaxComplexHermite)
    throw DomainError("complex_hermite_2d: order above 32");
  std::vector<Complex> zp(l + 1), wp(k + 1);
  zp[0] = wp[0] = 1.0;
  for (int i = 1; i <= l; ++i) zp[i] = zp[i - 1] * z;
  for (int i = 1; i <= k; ++i) wp[i] = wp[i - 1] * w;
  const double lk = log_factorial(k), ll = log_factorial(l);
  Complex sum = 0.0;
  for (int j = 0; j <= std::min(k, l); ++j) {
    // j! C(k,j) C(l,j) = k! l! / (j! (k-j)! (l-j)!)
    double c = std::exp(lk + ll - log_factorial(j) - log_factorial(k - j) - log_factorial(l - j));
    if (c < 9.0e15) c = std::round(c);  // exact integer below 2^53
    sum += sign_pow(j) * c * zp[l - j] * wp[k - j];
  }
  return sum;
}

int theta_half_width(Complex tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("theta: Im(tau) must be positive");
  return int(std::ceil(std::sqrt(14.0 * std::log(10.0) / (kPi * tau.imag())))) + 2;
}

Complex theta(Complex z, Complex tau, int half_width) {
  if (!(tau.imag() > 0.0)) throw DomainError("theta: Im(tau) must be positive");
  // dominant term sits at k = -Im z / Im tau
  const long centre = std::lround(-z.imag() / tau.imag());
  Complex sum = 0.0;
  for (long k = centre - half_width; k <= centre + half_width; ++k) {
    const double kd = double(k);
    sum += std::exp(kI * kPi * (kd * kd * tau + 2.0 * kd * z));
  }
  return sum;
}

Complex theta(Complex z, Complex tau) { return theta(z, tau, theta_half_width(tau)); }

Complex gaussian_integral(double alpha, Complex w) {
  if (!(alpha > 0.0)) throw DomainError("gaussian_integral: alpha must be positive");
  return std::sqrt(kPi / alpha) * std::exp(w * w / (4.0 * alpha));
}

}  // namespace superstft::special
