#include "superstft/signals.hpp"

#include <cmath>
#include <utility>

#include "superstft/special.hpp"

namespace superstft {

double hermite_decay_radius(int m) {
  double t = std::sqrt(2.0 * m + 1.0) + 1.0;
  while (std::abs(special::hermite_function(m, t)) >= 1e-16) t += 0.01;
  return t;
}

Window Window::gaussian() {
  Window w;
  w.kind_ = Kind::Gaussian;
  w.decay_ = hermite_decay_radius(0);
  w.name_ = "gaussian";
  return w;
}

Window Window::hermite(int m) {
  if (m < 0) throw DomainError("Window::hermite: order must be >= 0");
  if (m > special::kMaxHermite) throw DomainError("Window::hermite: order above 64");
  Window w;
  w.kind_ = Kind::Hermite;
  w.order_ = m;
  w.decay_ = hermite_decay_radius(m);
  w.name_ = "hermite";
  return w;
}

Window Window::custom(std::function<Complex(double)> g, double decay_radius, std::string name) {
  if (!g) throw ContractError("Window::custom: empty evaluator");
  if (!(decay_radius > 0.0) || !std::isfinite(decay_radius))
    throw ContractError("Window::custom: decay radius must be positive");
  Window w;
  w.kind_ = Kind::Custom;
  w.decay_ = decay_radius;
  w.name_ = std::move(name);
  w.custom_ = std::move(g);
  return w;
}

Complex Window::operator()(double t) const {
  switch (kind_) {
    case Kind::Gaussian: return std::exp(-0.5 * t * t);
    case Kind::Hermite: return special::hermite_function(order_, t);
    default: return custom_(t);
  }
}

double Window::norm_sq() const {
  if (kind_ != Kind::Custom) return special::hermite_norm_sq(order_);
  const Complex s = integrate([&](double t) { return std::norm((*this)(t)); }, -decay_, decay_,
                              default_quadrature());
  return s.real();
}

Evaluator Window::shifted(double x, double omega) const {
  Evaluator e;
  Window g = *this;
  if (omega == 0.0)
    e.f = [g, x](double t) { return g(t - x); };
  else
    e.f = [g, x, omega](double t) { return std::exp(kI * (omega * t)) * g(t - x); };
  e.lo = x - decay_;
  e.hi = x + decay_;
  return e;
}

namespace signals {

Complex time_frequency_shift(double x, double omega, const Window& g, double t) {
  return std::exp(kI * (omega * t)) * g(t - x);
}

Complex Signal::operator()(double t) const {
  Complex mod = 1.0;
  if (superosc)
    mod = superosc::f_n(*superosc, t);
  else if (limit_frequency)
    mod = std::exp(kI * (*limit_frequency * t));
  return mod * window(t - x);
}

Evaluator Signal::as_evaluator() const {
  Evaluator e;
  e.f = [s = *this](double t) { return s(t); };
  e.lo = x - window.decay_radius();
  e.hi = x + window.decay_radius();
  return e;
}

Signal build_signal(const Window& g, double x, const SuperoscParams& p) {
  p.validate();
  return Signal{g, x, p, std::nullopt};
}

Signal build_limit_signal(const Window& g, double x, double a) {
  return Signal{g, x, std::nullopt, a};
}

Complex evaluate(const Signal& s, double t) { return s(t); }

NormResult signal_norm_sq_closed(const Window& g, double x, const SuperoscParams& p) {
  if (!g.analytic())
    return {signal_norm_sq_numeric(build_signal(g, x, p), default_quadrature()),
            Provenance::Quadrature};
  const auto c = superosc::coefficients(p);
  const int m = g.order();
  const double n = p.n;
  Complex sum = 0.0;
  for (int k = 0; k <= p.n; ++k) {
    for (int j = 0; j <= p.n; ++j) {
      const double d = k - j;
      Complex term = std::exp(-d * d / (n * n) + kI * (2.0 * d * x / n));
      if (m > 0) {
        if (d == 0.0) {
          term *= sign_pow(m) * special::factorial(m);
        } else {
          const Complex z = std::sqrt(2.0) * d / n;
          term *= special::complex_hermite_2d(m, m, z, z);
        }
        term *= sign_pow(m) * std::ldexp(1.0, m);
      }
      sum += c[k] * c[j] * term;
    }
  }
  return {std::sqrt(kPi) * sum.real(), Provenance::Closed};
}

double signal_norm_sq_numeric(const Signal& s, const QuadratureSpec& q) {
  const Evaluator e = s.as_evaluator();
  return integrate([&](double t) { return std::norm(e(t)); }, e.lo, e.hi, q).real();
}

}  // namespace signals
}  // namespace superstft
