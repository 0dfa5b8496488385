#include "superstft/evolution.hpp"

#include <cmath>

#include "superstft/kernels.hpp"
#include "superstft/special.hpp"
#include "superstft/transforms.hpp"

namespace superstft::evolution {

Evolved evolve_numeric(const Window& g, const EvolutionPoint& pt, const QuadratureSpec& q) {
  const double rf = q.truncation_radius > 0.0 ? q.truncation_radius : g.decay_radius();
  const double lo = pt.k0 - rf, hi = pt.k0 + rf;
  const double T = std::max(std::abs(lo), std::abs(hi));
  const Rule r = make_rule(lo, hi, q, 1.0 + std::abs(pt.t) * T, kMaxOscillatoryNodes);
  const Evaluator ge = g.shifted();
  QuadratureSpec inner = q;
  inner.truncation_radius = 0.0;
  const Complex v = integrate(r, [&](double p) {
    const Complex fg = transforms::fourier(ge, p - pt.k0, inner);
    return std::polar(1.0, -pt.x0 * (p - pt.k0) - p * p * pt.t + p * pt.x) * fg;
  });
  return {v, r.capped || std::abs(pt.t) * T * T > kOscillationThreshold};
}

Complex evolve_gaussian_closed(const EvolutionPoint& pt) {
  const Complex d(1.0, 2.0 * pt.t);
  const Complex b(pt.k0, pt.x - pt.x0);
  return normalization() / std::sqrt(d) *
         std::exp(Complex(-0.5 * pt.k0 * pt.k0, pt.x0 * pt.k0) + b * b / (2.0 * d));
}

Evolved evolve_hermite(int m, const EvolutionPoint& pt, const QuadratureSpec& q) {
  const double r = q.truncation_radius > 0.0 ? q.truncation_radius : hermite_decay_radius(m);
  const Rule rule = make_rule(-r, r, q, 1.0 + std::abs(pt.t) * r, kMaxOscillatoryNodes);
  const double shift = pt.x - pt.x0 - 2.0 * pt.k0 * pt.t;
  const Complex integral = integrate(rule, [&](double u) {
    return std::polar(special::hermite_function(m, u), -u * u * pt.t + u * shift);
  });
  // F(h_m) = sqrt(2 pi) (-i)^m h_m
  const Complex v = std::sqrt(2.0 * kPi) * minus_ipow(m) *
                    std::polar(1.0, pt.k0 * pt.x - pt.k0 * pt.k0 * pt.t) * integral;
  return {v, rule.capped || std::abs(pt.t) * r * r > kOscillationThreshold};
}

Complex evolve_superosc(const SuperoscParams& p, double y, double t) {
  return superosc::supershift_probe([&](double w) { return std::polar(1.0, w * y - w * w * t); },
                                    p);
}

Complex evolve_superosc_integral(const SuperoscParams& p, double x, double y, double t,
                                 const QuadratureSpec& q2d, double radius) {
  const Window g = Window::gaussian();
  const auto c = superosc::coefficients(p);
  const auto w = superosc::frequencies(p.n);
  const Complex s = integrate_plane(
      [&](double u, double eta) {
        Complex phi = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j)
          phi += c[j] * kernels::gabor_kernel_gaussian({x, w[j], u, eta});
        return phi * normalized(evolve_gaussian_closed({y, t, u, eta}));
      },
      std::min(x, y) - radius, std::max(x, y) + radius, -1.0 - radius, 1.0 + radius, q2d);
  return s / (transforms::kMoyalConstant * g(y - x) * g.norm_sq());
}

Complex evolve_superosc_kernel_sum(const SuperoscParams& p, double x, double y, double t) {
  const Complex s = superosc::supershift_probe(
      [&](double w) { return normalized(evolve_gaussian_closed({y, t, x, w})); }, p);
  return s / std::exp(-0.5 * (y - x) * (y - x));
}

}  // namespace superstft::evolution
