#pragma once

#include <string>
#include <utility>

#include "superstft/superosc.hpp"
#include "superstft/window.hpp"

namespace superstft::zak {

using superosc::SuperoscParams;

// sum_k f(u-k) e^{ik eta}, over the k for which u-k lies in [f.lo, f.hi]
Complex zak(const Evaluator& f, double u, double eta);
// same with the summation range widened by extra on each side
Complex zak(const Evaluator& f, double u, double eta, double extra);

// |Z(T_x M_omega f)(u,eta) - e^{i omega(u-x)} Z f(u-x, eta-omega)|
double zak_shift_identity_check(const Evaluator& f, double x, double omega, double u, double eta);

// sum_j C_j e^{i omega_j u} Z(g)(u-x, eta-omega_j)
Complex zak_superosc(const Window& g, double x, const SuperoscParams& p, double u, double eta);

// sum_k e^{-(u-k)^2/2} e^{ik eta}
Complex zak_gaussian_series(double u, double eta);

// e^{-t^2/2} F_n(t,a)
Evaluator ftilde(const SuperoscParams& p);
// sum_k Ftilde(u-k) e^{ik eta}
Complex zak_ftilde(const SuperoscParams& p, double u, double eta);

struct BoundCheck {
  double value = 0.0;  // |Z(Ftilde)(u,eta)|
  double bound = 0.0;  // (1+a)^n e^{-u^2/2} theta(-iu/2pi, i/2pi)
};
BoundCheck theta_bound_check(const SuperoscParams& p, double u, double eta);

enum class Verdict { Frame, NotFrame, Inconclusive };
std::string to_string(Verdict v);

struct FrameVerdict {
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  int grid_resolution = 0;
  Verdict verdict = Verdict::Inconclusive;
  double tolerance = 1e-8;
  // smallest |Z| found (grid or refinement) and where
  double min_u = 0.0, min_eta = 0.0;
  bool zero_confirmed = false;
  // sum over unit cells of sup |f|; numeric stand-in for Wiener-space membership
  double wiener_estimate = 0.0;
  bool wiener_heuristic = true;
};

// Scans |Z f| on u = i/res in [0,1), eta = 2 pi j/res in [0, 2 pi), then refines
// the smallest local minima.
FrameVerdict frame_check(const Evaluator& f, int resolution, double tolerance = 1e-8);

double wiener_estimate(const Evaluator& f, int samples_per_cell = 64);

}  // namespace superstft::zak
