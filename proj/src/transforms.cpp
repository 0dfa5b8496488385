#include "superstft/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace superstft::transforms {

ComplexGrid::ComplexGrid(std::vector<double> u, std::vector<double> eta)
    : u_axis(std::move(u)), eta_axis(std::move(eta)), values(u_axis.size() * eta_axis.size()) {
  validate();
}

void ComplexGrid::validate() const {
  if (values.size() != u_axis.size() * eta_axis.size())
    throw ContractError("ComplexGrid: value count does not match axes");
  for (const auto* ax : {&u_axis, &eta_axis})
    for (std::size_t i = 1; i < ax->size(); ++i)
      if (!((*ax)[i] > (*ax)[i - 1])) throw ContractError("ComplexGrid: axes must increase");
}

namespace {

// index i with ax[i] <= v <= ax[i+1], and the fractional offset
std::pair<std::size_t, double> locate(const std::vector<double>& ax, double v) {
  if (ax.size() < 2 || v < ax.front() || v > ax.back())
    throw CoverageError("grid does not cover the requested point", 0.0);
  auto it = std::upper_bound(ax.begin(), ax.end(), v);
  std::size_t i = std::size_t(it - ax.begin());
  i = std::min(i == 0 ? 0 : i - 1, ax.size() - 2);
  return {i, (v - ax[i]) / (ax[i + 1] - ax[i])};
}

bool is_uniform(const std::vector<double>& ax) {
  if (ax.size() < 3) return true;
  const double d = (ax.back() - ax.front()) / double(ax.size() - 1);
  const double scale = std::max({1.0, std::abs(ax.front()), std::abs(ax.back())});
  for (std::size_t i = 1; i < ax.size(); ++i)
    if (std::abs(ax[i] - ax[0] - d * double(i)) > 1e-12 * scale) return false;
  return true;
}

Complex checked(Complex v) {
  if (!finite(v)) throw NumericError("non-finite sample");
  return v;
}

}  // namespace

Complex ComplexGrid::interpolate(double u, double eta) const {
  const auto [i, s] = locate(u_axis, u);
  const auto [j, r] = locate(eta_axis, eta);
  return (1 - s) * (1 - r) * at(i, j) + s * (1 - r) * at(i + 1, j) + (1 - s) * r * at(i, j + 1) +
         s * r * at(i + 1, j + 1);
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = lo + (hi - lo) * double(i) / double(count - 1);
  v.back() = hi;
  return v;
}

Complex fourier(const Evaluator& f, double lambda, const QuadratureSpec& q) {
  return integrate([&](double t) { return std::polar(1.0, -t * lambda) * f(t); }, f.lo, f.hi, q);
}

Complex stft(const Evaluator& f, const Window& g, double x, double omega,
             const QuadratureSpec& q) {
  const double r = g.decay_radius();
  return integrate(
      [&](double t) { return std::polar(1.0, -t * omega) * std::conj(g(t - x)) * f(t); },
      std::max(f.lo, x - r), std::min(f.hi, x + r), q);
}

ComplexGrid stft_grid(const Evaluator& f, const Window& g, const std::vector<double>& u_axis,
                      const std::vector<double>& eta_axis, const QuadratureSpec& q) {
  ComplexGrid out(u_axis, eta_axis);
  const double r = g.decay_radius();
  const bool uniform = is_uniform(eta_axis);
  const std::size_t ne = eta_axis.size();
  const double d = ne > 1 ? (eta_axis.back() - eta_axis.front()) / double(ne - 1) : 0.0;
  constexpr std::size_t kResync = 32;
  std::vector<Complex> a, phase, step;
  for (std::size_t i = 0; i < u_axis.size(); ++i) {
    const double x = u_axis[i];
    double lo = std::max(f.lo, x - r), hi = std::min(f.hi, x + r);
    clip(lo, hi, q);
    if (!(hi > lo)) continue;
    const Rule rule = make_rule(lo, hi, q);
    const std::size_t nt = rule.x.size();
    a.resize(nt);
    for (std::size_t k = 0; k < nt; ++k)
      a[k] = rule.w[k] * checked(std::conj(g(rule.x[k] - x)) * f(rule.x[k]));
    if (uniform) {
      phase.resize(nt);
      step.resize(nt);
      for (std::size_t k = 0; k < nt; ++k) step[k] = std::polar(1.0, -rule.x[k] * d);
    }
    for (std::size_t j = 0; j < ne; ++j) {
      Complex s = 0.0;
      if (!uniform) {
        for (std::size_t k = 0; k < nt; ++k) s += a[k] * std::polar(1.0, -rule.x[k] * eta_axis[j]);
      } else {
        if (j % kResync == 0)
          for (std::size_t k = 0; k < nt; ++k) phase[k] = std::polar(1.0, -rule.x[k] * eta_axis[j]);
        for (std::size_t k = 0; k < nt; ++k) {
          s += a[k] * phase[k];
          phase[k] *= step[k];
        }
      }
      out.at(i, j) = s;
    }
  }
  return out;
}

RealGrid spectrogram(const ComplexGrid& v, const Window& g) {
  const double n2 = g.norm_sq();
  if (!(n2 > 0.0)) throw DomainError("spectrogram: zero window");
  RealGrid s{v.u_axis, v.eta_axis, std::vector<double>(v.values.size())};
  for (std::size_t i = 0; i < v.values.size(); ++i) s.values[i] = std::norm(v.values[i]) / n2;
  return s;
}

Complex reconstruct(const ComplexGrid& v, const Window& g, double y, const QuadratureSpec& q2d) {
  v.validate();
  const double n2 = g.norm_sq();
  if (!(n2 > 0.0)) throw DomainError("reconstruct: zero window");
  if (v.u_axis.size() < 2 || v.eta_axis.size() < 2)
    throw CoverageError("reconstruct: grid needs at least 2x2 nodes", 0.0);
  const std::size_t nu = v.u_axis.size(), ne = v.eta_axis.size();
  double peak = 0.0, edge = 0.0;
  for (std::size_t i = 0; i < nu; ++i) {
    const double gy = std::abs(g(y - v.u_axis[i]));
    for (std::size_t j = 0; j < ne; ++j) {
      const double m = std::abs(v.at(i, j)) * gy;
      peak = std::max(peak, m);
      if (i == 0 || j == 0 || i + 1 == nu || j + 1 == ne) edge = std::max(edge, m);
    }
  }
  if (peak > 0.0 && edge > 1e-12 * peak)
    throw CoverageError("reconstruct: integrand not negligible on the grid boundary", edge);
  const Complex s = integrate_plane(
      [&](double x, double w) { return v.interpolate(x, w) * std::polar(1.0, w * y) * g(y - x); },
      v.u_axis.front(), v.u_axis.back(), v.eta_axis.front(), v.eta_axis.back(), q2d);
  return s / (kMoyalConstant * n2);
}

Complex ambiguity(const Window& g, double u, double eta, const QuadratureSpec& q) {
  return std::polar(1.0, 0.5 * u * eta) * stft(g.shifted(), g, u, eta, q);
}

Complex bargmann_kernel(Complex z, double t) {
  return std::pow(kPi, -0.75) * std::exp(-0.5 * (z * z + t * t) + std::sqrt(2.0) * z * t);
}

Complex bargmann(const Evaluator& f, Complex z, const QuadratureSpec& q) {
  return integrate([&](double t) { return bargmann_kernel(z, t) * f(t); }, f.lo, f.hi, q);
}

Complex convolve(const Evaluator& f, const Evaluator& g, double lambda, const QuadratureSpec& q) {
  return integrate([&](double s) { return f(s) * g(lambda - s); }, std::max(f.lo, lambda - g.hi),
                   std::min(f.hi, lambda - g.lo), q);
}

Complex inner_product(const Evaluator& f, const Evaluator& g, const QuadratureSpec& q) {
  return integrate([&](double t) { return f(t) * std::conj(g(t)); }, std::max(f.lo, g.lo),
                   std::min(f.hi, g.hi), q);
}

ComplexGrid stft_plane_grid(const Evaluator& f, const Window& g, double radius,
                            const QuadratureSpec& q1d, const QuadratureSpec& q2d) {
  const Rule r = make_rule(-radius, radius, q2d);
  return stft_grid(f, g, r.x, r.x, q1d);
}

Complex stft_plane_inner(const Evaluator& f1, const Window& g1, const Evaluator& f2,
                         const Window& g2, double radius, const QuadratureSpec& q1d,
                         const QuadratureSpec& q2d) {
  const Rule r = make_rule(-radius, radius, q2d);
  const ComplexGrid a = stft_grid(f1, g1, r.x, r.x, q1d);
  const ComplexGrid b = stft_grid(f2, g2, r.x, r.x, q1d);
  Complex s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < r.x.size(); ++j) row += r.w[j] * a.at(i, j) * std::conj(b.at(i, j));
    s += r.w[i] * row;
  }
  return s;
}

}  // namespace superstft::transforms
