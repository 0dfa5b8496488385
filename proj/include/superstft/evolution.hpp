#pragma once

#include "superstft/quadrature.hpp"
#include "superstft/superosc.hpp"
#include "superstft/window.hpp"

namespace superstft::evolution {

using superosc::SuperoscParams;

struct EvolutionPoint {
  double x = 0.0;   // position
  double t = 0.0;   // time
  double x0 = 0.0;  // initial translation
  double k0 = 0.0;  // initial modulation
};

// Outputs follow the unnormalized inverse transform, so t = 0 gives 2 pi times
// the datum M_{k0} T_{x0} g; divide by normalization() for the datum itself.
inline constexpr double normalization() { return 2.0 * kPi; }
inline Complex normalized(Complex v) { return v / normalization(); }

struct Evolved {
  Complex value;
  bool accuracy_flag = false;  // oscillatory integrand beyond the reliable range
};

// t T^2 above this raises the accuracy flag
inline constexpr double kOscillationThreshold = 1e4;
// node budget for one oscillatory integral
inline constexpr std::size_t kMaxOscillatoryNodes = 1u << 18;

// int (T_{k0} M_{-x0} F g)(p) e^{-ip^2 t} e^{ipx} dp, F g by quadrature
Evolved evolve_numeric(const Window& g, const EvolutionPoint& pt, const QuadratureSpec& q);

// 2 pi (1+2it)^{-1/2} e^{i x0 k0 - k0^2/2} e^{[k0 + i(x-x0)]^2 / (2(1+2it))}
Complex evolve_gaussian_closed(const EvolutionPoint& pt);

// sqrt(2pi) (-i)^m e^{ik0 x - ik0^2 t} int e^{-iu^2 t + iu(x-x0-2k0 t)} h_m(u) du
Evolved evolve_hermite(int m, const EvolutionPoint& pt, const QuadratureSpec& q);

// sum_j C_j e^{i omega_j y - i omega_j^2 t}
Complex evolve_superosc(const SuperoscParams& p, double y, double t);

// Gaussian window, centre x:
// (1/(2 pi g(y-x) ||g||^2)) iint phi_n(u,eta) normalized(evolve_gaussian_closed(y,t,u,eta)) du deta
Complex evolve_superosc_integral(const SuperoscParams& p, double x, double y, double t,
                                 const QuadratureSpec& q2d, double radius = 12.0);
// closed value of the same integral: sum_j C_j normalized(phi(y,t;x,omega_j)) / g(y-x)
Complex evolve_superosc_kernel_sum(const SuperoscParams& p, double x, double y, double t);

}  // namespace superstft::evolution
