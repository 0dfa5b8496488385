#pragma once

#include <functional>
#include <string>

#include "superstft/core.hpp"

namespace superstft {

// A function on the real line together with an interval outside which it is
// below 1e-16 (relative to its peak). Quadratures integrate over [lo, hi].
struct Evaluator {
  std::function<Complex(double)> f;
  double lo = 0.0;
  double hi = 0.0;

  Complex operator()(double t) const { return f(t); }
};

class Window {
 public:
  enum class Kind { Gaussian, Hermite, Custom };

  static Window gaussian();
  static Window hermite(int m);
  static Window custom(std::function<Complex(double)> g, double decay_radius,
                       std::string name = "custom");

  Complex operator()(double t) const;

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  double decay_radius() const { return decay_; }
  const std::string& name() const { return name_; }
  bool analytic() const { return kind_ != Kind::Custom; }

  // ||g||^2; closed form for Gaussian/Hermite, quadrature for Custom.
  double norm_sq() const;

  // t -> e^{i omega t} g(t - x)
  Evaluator shifted(double x = 0.0, double omega = 0.0) const;

 private:
  Window() = default;
  Kind kind_ = Kind::Gaussian;
  int order_ = 0;
  double decay_ = 0.0;
  std::string name_;
  std::function<Complex(double)> custom_;
};

// Radius beyond which |h_m| < 1e-16.
double hermite_decay_radius(int m);

}  // namespace superstft
