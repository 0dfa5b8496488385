#pragma once

#include <utility>

#include "superstft/quadrature.hpp"
#include "superstft/superosc.hpp"
#include "superstft/window.hpp"

namespace superstft::kernels {

using superosc::SuperoscParams;

struct TFQuadruple {
  double x = 0.0, omega = 0.0, u = 0.0, eta = 0.0;
};

// <M_omega T_x g, M_eta T_u g> = int e^{it(omega-eta)} g(t-x) conj(g(t-u)) dt
Complex gabor_kernel_numeric(const Window& g, const TFQuadruple& q, const QuadratureSpec& quad);

Complex gabor_kernel_gaussian(const TFQuadruple& q);

// Gaussian kernel times L_n(((x-u)^2 + (omega-eta)^2)/2), as printed for h_n.
Complex gabor_kernel_hermite_printed(int n, const TFQuadruple& q);
// For the un-normalized h_n the kernel carries ||h_n||^2/sqrt(pi) = 2^n n!.
double hermite_kernel_calibration(int n);
Complex gabor_kernel_hermite(int n, const TFQuadruple& q);

// Closed form for Gaussian/Hermite windows, quadrature otherwise.
Complex gabor_kernel(const Window& g, const TFQuadruple& q, const QuadratureSpec& quad);

// sum_j C_j K_g(x, omega_j; u, eta)
Complex stft_superosc_closed(const Window& g, double x, const SuperoscParams& p, double u,
                             double eta, const QuadratureSpec& quad = default_quadrature());
// K_g(x, a; u, eta)
Complex stft_superosc_limit(const Window& g, double x, double a, double u, double eta,
                            const QuadratureSpec& quad = default_quadrature());

// V_{h_k}(S_n^{h_m,x})(u, eta): window h_k, signal built on h_m.
Complex stft_superosc_cross_printed(int k, int m, double x, const SuperoscParams& p, double u,
                                    double eta);
double cross_window_calibration(int k, int m);  // (-1)^{k+m}
Complex stft_superosc_cross(int k, int m, double x, const SuperoscParams& p, double u, double eta);
// Same object through the I_{m,k} route.
Complex stft_superosc_cross_via_ikm(int k, int m, double x, const SuperoscParams& p, double u,
                                    double eta);
// V_{h_k}(M_a T_x h_m)(u, eta)
Complex stft_superosc_limit_cross_printed(int k, int m, double x, double a, double u, double eta);
Complex stft_superosc_limit_cross(int k, int m, double x, double a, double u, double eta);

// (1/pi) e^{z conj(w)}
Complex fock_kernel(Complex z, Complex w);
// k_w(z) = (1/sqrt(pi)) e^{z conj(w) - |w|^2/2}
Complex normalized_fock_kernel(Complex w, Complex z);

// pi e^{ux} M_p^{-1} sum_j C_j k_{omega_j/sqrt2}(conj(p)/sqrt2), p = eta - i(u+x)
Complex stft_superosc_fock_form(double x, const SuperoscParams& p, double u, double eta);
// with k_{omega_j/2}(conj(p)) as printed
Complex stft_superosc_fock_form_printed(double x, const SuperoscParams& p, double u, double eta);

// ||V_phi(S_n^{phi,x})||^2 = pi sum_{j,k} C_j C_k e^{-2ix(j-k)/n - (k-j)^2/n^2}
double norm_sq_closed_gaussian(double x, const SuperoscParams& p);
// (1/sqrt(pi)) int |phi_{n,a}(s)|^2 e^{-s^2} ds
double phi_na_norm(double x, const SuperoscParams& p, const QuadratureSpec& quad);
// ||V_{h_k}(S_n^{h_m,x})||^2
double norm_sq_closed_hermite(int k, int m, double x, const SuperoscParams& p);

// (M_x h_k * M_u h_m)(lambda)
Complex hermite_convolution_closed(int k, int m, double x, double u, double lambda);
Complex hermite_convolution_printed(int k, int m, double x, double u, double lambda);
// (h_k * h_m)(lambda) = sqrt(pi) 2^{(k+m)/2} e^{-lambda^2/4} H_{k,m}(lambda/sqrt2, lambda/sqrt2)
Complex hermite_convolution_origin(int k, int m, double lambda);
// (M_x h_k * M_x h_m)(lambda)
Complex hermite_convolution_same_shift(int k, int m, double x, double lambda);

// I_{k,m}(x, u, lambda); polynomial, so complex arguments are allowed.
Complex i_km_series(int k, int m, Complex x, Complex u, Complex lambda);
Complex i_km_closed(int k, int m, Complex x, Complex u, Complex lambda);
Complex i_km_closed_printed(int k, int m, Complex x, Complex u, Complex lambda);
// int e^{it lambda} h_k(t-x) h_m(t-u) dt through I_{k,m}
Complex hermite_overlap_closed(int k, int m, double x, double u, double lambda);

// e_m(z) = z^m / sqrt(m! pi)
Complex fock_basis(int m, Complex z);
Complex weyl_action_on_basis(double a, double b, int m, Complex z);

// (truncated sum_{k,m<=K} u^k v^m/(2^{(k+m)/2} k! m!) (M_x h_k * M_x h_m)(lambda),
//  sqrt(pi) e^{-lambda^2/4 + lambda(ix + (u+v)/sqrt2)} e^{-uv})
std::pair<Complex, Complex> generating_sum_check(double x, Complex u, Complex v, double lambda,
                                                 int K);
// (truncated sum u^k v^m/(2^{(k+m)/2} k! m!) (-i)^{k+m} h_k(lambda-x) h_m(lambda-x),
//  e^{-uv-(x-lambda)^2+(u+v)^2/2+sqrt2 i(x-lambda)(u+v)})
std::pair<Complex, Complex> hermite_product_generating_check(double x, Complex u, Complex v,
                                                             double lambda, int K);
// printed right side carries an extra 2 pi
Complex hermite_product_generating_printed(double x, Complex u, Complex v, double lambda);

// (truncated sum H_{m,n}(z,w) u^m v^n/(m! n!), e^{uw + vz - uv})
std::pair<Complex, Complex> complex_hermite_generating_check(Complex z, Complex w, Complex u,
                                                             Complex v, int K);
Complex complex_hermite_generating_printed(Complex z, Complex w, Complex u, Complex v);

// (1/(2 pi g(y-x) ||g||^2)) iint phi_n(u,eta) (M_eta T_u g)(y) du deta
Complex stft_integral_representation(const Window& g, double x, double y, const SuperoscParams& p,
                                     const QuadratureSpec& quad2d, double radius = 12.0);

}  // namespace superstft::kernels
