#pragma once

#include <optional>

#include "superstft/quadrature.hpp"
#include "superstft/superosc.hpp"
#include "superstft/window.hpp"

namespace superstft::signals {

using superosc::SuperoscParams;

// (M_omega T_x g)(t) = e^{i omega t} g(t - x)
Complex time_frequency_shift(double x, double omega, const Window& g, double t);

struct Signal {
  Window window;
  double x = 0.0;
  std::optional<SuperoscParams> superosc;
  std::optional<double> limit_frequency;

  Complex operator()(double t) const;
  Evaluator as_evaluator() const;
};

// F_n(t,a) g(t-x)
Signal build_signal(const Window& g, double x, const SuperoscParams& p);
// e^{iat} g(t-x)
Signal build_limit_signal(const Window& g, double x, double a);

Complex evaluate(const Signal& s, double t);

enum class Provenance { Closed, Quadrature };

struct NormResult {
  double value = 0.0;
  Provenance provenance = Provenance::Closed;
};

// ||S_n^{g,x}||^2
NormResult signal_norm_sq_closed(const Window& g, double x, const SuperoscParams& p);
double signal_norm_sq_numeric(const Signal& s, const QuadratureSpec& q);

}  // namespace superstft::signals
