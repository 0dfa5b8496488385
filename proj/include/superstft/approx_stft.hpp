#pragma once

#include "superstft/quadrature.hpp"
#include "superstft/superosc.hpp"
#include "superstft/window.hpp"

namespace superstft::approx_stft {

using superosc::SuperoscParams;

// phi_{psi,n,a} = sum_j C_j psi(. + omega_j) as an evaluator
Evaluator approximating_evaluator(const Window& psi, const SuperoscParams& p, double shift = 0.0);

// e^{-iu eta/2} sum_j C_j e^{i eta omega_j/2} A[g](u + omega_j, eta)
Complex stft_approx_via_ambiguity(const Window& g, const SuperoscParams& p, double u, double eta,
                                  const QuadratureSpec& q);

// V_{h_k}(phi_{h_m,n,a})(u, eta):
// sqrt(pi) (-1)^k 2^{(k+m)/2} e^{-iu eta/2 - (u^2+eta^2)/4}
//   sum_j C_j e^{-omega_j^2/4 - (u - i eta) omega_j/2} H_{k,m}(conj(z_j), z_j)
// with z_j = ((u + omega_j) + i eta)/sqrt2
Complex stft_approx_hermite_closed(int k, int m, const SuperoscParams& p, double u, double eta);
// sqrt(pi/k!) 2^{k/2} (...) H_{k,m}(z_j, conj(z_j)) as printed
Complex stft_approx_hermite_printed(int k, int m, const SuperoscParams& p, double u, double eta);
// closed / printed for k = m: (-1)^k 2^{k/2} sqrt(k!)
double approx_hermite_calibration(int k);

// V_{h_k}(h_m)(u, eta)
Complex stft_hermite_pair(int k, int m, double u, double eta);

// V_phi(phi(. + a))(u, eta) = sqrt(pi) e^{-(u^2+eta^2+a^2)/4} e^{-(u - i eta) a/2} e^{-iu eta/2}
Complex stft_approx_limit_gaussian(double a, double u, double eta);

}  // namespace superstft::approx_stft
