#pragma once

#include "superstft/core.hpp"

namespace superstft::special {

inline constexpr int kMaxHermite = 64;
inline constexpr int kMaxComplexHermite = 32;

double hermite_polynomial(int n, double t);

// e^{-t^2/2} H_n(t), not normalized: ||h_n||^2 = 2^n n! sqrt(pi)
double hermite_function(int n, double t);

double hermite_norm_sq(int n);

double laguerre(int n, double x);
double generalized_laguerre(int n, int alpha, double x);

// H_{k,l}(z,w) = sum_j (-1)^j j! C(k,j) C(l,j) z^{l-j} w^{k-j}
Complex complex_hermite_2d(int k, int l, Complex z, Complex w);

// sum_k exp(pi i k^2 tau + 2 pi i k z)
Complex theta(Complex z, Complex tau);
Complex theta(Complex z, Complex tau, int half_width);  // fixed window around the peak
int theta_half_width(Complex tau);

// int e^{-alpha t^2 + w t} dt
Complex gaussian_integral(double alpha, Complex w);

double log_factorial(int n);
double binomial(int n, int k);
double factorial(int n);

}  // namespace superstft::special
