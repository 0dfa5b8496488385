#include "superstft/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <cstdlib>
#include <string>

namespace superstft {

void QuadratureSpec::validate() const {
  if (nodes_per_unit < 16) throw ContractError("QuadratureSpec: nodes_per_unit must be >= 16");
  if (!std::isfinite(truncation_radius)) throw ContractError("QuadratureSpec: non-finite radius");
}

QuadratureSpec QuadratureSpec::doubled() const {
  QuadratureSpec q = *this;
  q.nodes_per_unit *= 2;
  return q;
}

int default_nodes_per_unit() {
  if (const char* env = std::getenv("SUPERSTFT_QUAD_NODES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 16 || v > 1 << 20)
      throw ContractError("SUPERSTFT_QUAD_NODES must be an integer >= 16");
    return int(v);
  }
  return 64;
}

QuadratureSpec default_quadrature() {
  QuadratureSpec q;
  q.nodes_per_unit = default_nodes_per_unit();
  return q;
}

QuadratureSpec default_quadrature_2d() {
  QuadratureSpec q;
  q.nodes_per_unit = std::max(16, default_nodes_per_unit() / 4);
  return q;
}

void clip(double& lo, double& hi, const QuadratureSpec& q) {
  if (q.truncation_radius > 0.0) {
    lo = std::max(lo, -q.truncation_radius);
    hi = std::min(hi, q.truncation_radius);
  }
}

Rule make_rule(double lo, double hi, const QuadratureSpec& q, double density_scale,
               std::size_t max_nodes) {
  q.validate();
  Rule r;
  if (!(hi > lo)) return r;
  const double len = hi - lo;
  double want = std::ceil(len * q.nodes_per_unit * std::max(1.0, density_scale));
  if (want > double(max_nodes)) {
    want = double(max_nodes);
    r.capped = true;
  }
  if (q.scheme == Scheme::CompositeSimpson) {
    std::size_t n = std::max<std::size_t>(2, std::size_t(want));
    if (n % 2) ++n;
    const double h = len / double(n);
    r.x.resize(n + 1);
    r.w.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      r.x[i] = lo + h * double(i);
      r.w[i] = (i == 0 || i == n) ? h / 3.0 : (i % 2 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
    }
    r.x[n] = hi;
  } else {
    using gauss = boost::math::quadrature::gauss<double, 8>;
    const auto& abs = gauss::abscissa();
    const auto& wts = gauss::weights();
    const std::size_t panels = std::max<std::size_t>(1, std::size_t(std::ceil(want / 8.0)));
    const double h = len / double(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double c = lo + h * (double(p) + 0.5);
      for (std::size_t k = 0; k < abs.size(); ++k) {
        r.x.push_back(c - 0.5 * h * abs[k]);
        r.w.push_back(0.5 * h * wts[k]);
        if (abs[k] != 0.0) {
          r.x.push_back(c + 0.5 * h * abs[k]);
          r.w.push_back(0.5 * h * wts[k]);
        }
      }
    }
    std::vector<std::size_t> idx(r.x.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return r.x[a] < r.x[b]; });
    Rule s;
    s.capped = r.capped;
    for (std::size_t i : idx) {
      s.x.push_back(r.x[i]);
      s.w.push_back(r.w[i]);
    }
    return s;
  }
  return r;
}

}  // namespace superstft
