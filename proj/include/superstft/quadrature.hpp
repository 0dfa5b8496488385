#pragma once

#include <vector>

#include "superstft/core.hpp"

namespace superstft {

enum class Scheme { CompositeSimpson, GaussLegendrePanels };

struct QuadratureSpec {
  // Integration is clipped to [-T, T]; T <= 0 lets each transform use the
  // decay supports of its factors.
  double truncation_radius = 0.0;
  int nodes_per_unit = 64;
  Scheme scheme = Scheme::CompositeSimpson;

  void validate() const;
  QuadratureSpec doubled() const;
};

// nodes_per_unit from SUPERSTFT_QUAD_NODES (>= 16) or 64.
int default_nodes_per_unit();
QuadratureSpec default_quadrature();
// Same, with the coarser default used for plane integrals.
QuadratureSpec default_quadrature_2d();

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
  bool capped = false;  // node budget hit
};

// density_scale multiplies nodes_per_unit; max_nodes bounds the rule size.
Rule make_rule(double lo, double hi, const QuadratureSpec& q, double density_scale = 1.0,
               std::size_t max_nodes = 1u << 22);

// Clip [lo, hi] by the spec's truncation radius.
void clip(double& lo, double& hi, const QuadratureSpec& q);

template <class F>
Complex integrate(const Rule& r, F&& f) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const Complex v = f(r.x[i]);
    if (!finite(v)) throw NumericError("non-finite integrand sample");
    s += r.w[i] * v;
  }
  return s;
}

template <class F>
Complex integrate(F&& f, double lo, double hi, const QuadratureSpec& q) {
  clip(lo, hi, q);
  if (!(hi > lo)) return 0.0;
  return integrate(make_rule(lo, hi, q), f);
}

// Iterated 1-D rule over [xlo,xhi] x [ylo,yhi]; f(x, y).
template <class F>
Complex integrate_plane(F&& f, double xlo, double xhi, double ylo, double yhi,
                        const QuadratureSpec& q) {
  const Rule rx = make_rule(xlo, xhi, q), ry = make_rule(ylo, yhi, q);
  Complex s = 0.0;
  for (std::size_t i = 0; i < rx.x.size(); ++i) {
    Complex inner = 0.0;
    for (std::size_t j = 0; j < ry.x.size(); ++j) {
      const Complex v = f(rx.x[i], ry.x[j]);
      if (!finite(v)) throw NumericError("non-finite integrand sample");
      inner += ry.w[j] * v;
    }
    s += rx.w[i] * inner;
  }
  return s;
}

}  // namespace superstft
