#include "superstft/zak.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "superstft/special.hpp"

namespace superstft::zak {

namespace {

void require_support(const Evaluator& f) {
  if (!f.f || !std::isfinite(f.lo) || !std::isfinite(f.hi) || !(f.hi > f.lo))
    throw ContractError("zak: evaluator needs a finite decay support");
}

}  // namespace

Complex zak(const Evaluator& f, double u, double eta, double extra) {
  require_support(f);
  const long k0 = long(std::floor(u - f.hi - extra)), k1 = long(std::ceil(u - f.lo + extra));
  Complex s = 0.0;
  for (long k = k0; k <= k1; ++k) s += f(u - double(k)) * std::polar(1.0, double(k) * eta);
  return s;
}

Complex zak(const Evaluator& f, double u, double eta) { return zak(f, u, eta, 0.0); }

double zak_shift_identity_check(const Evaluator& f, double x, double omega, double u, double eta) {
  require_support(f);
  Evaluator shifted{[&f, x, omega](double t) { return std::polar(1.0, omega * (t - x)) * f(t - x); },
                    f.lo + x, f.hi + x};
  const Complex lhs = zak(shifted, u, eta);
  const Complex rhs = std::polar(1.0, omega * (u - x)) * zak(f, u - x, eta - omega);
  return std::abs(lhs - rhs);
}

Complex zak_superosc(const Window& g, double x, const SuperoscParams& p, double u, double eta) {
  const Evaluator e = g.shifted();
  return superosc::supershift_probe(
      [&](double w) { return std::polar(1.0, w * u) * zak(e, u - x, eta - w); }, p);
}

Complex zak_gaussian_series(double u, double eta) {
  return zak(Window::gaussian().shifted(), u, eta);
}

Evaluator ftilde(const SuperoscParams& p) {
  p.validate();
  const double r = Window::gaussian().decay_radius();
  // the F_n factor grows at most like (1+|a|)^n; widen the support to cover it
  const double extra = std::sqrt(2.0 * p.n * std::log1p(std::abs(p.a)));
  const double rr = std::sqrt(r * r + extra * extra);
  return {[p](double t) { return std::exp(-0.5 * t * t) * superosc::f_n(p, t); }, -rr, rr};
}

Complex zak_ftilde(const SuperoscParams& p, double u, double eta) { return zak(ftilde(p), u, eta); }

BoundCheck theta_bound_check(const SuperoscParams& p, double u, double eta) {
  const Complex th = special::theta(Complex(0.0, -u / (2.0 * kPi)), Complex(0.0, 1.0 / (2.0 * kPi)));
  return {std::abs(zak_ftilde(p, u, eta)),
          std::pow(1.0 + p.a, p.n) * std::exp(-0.5 * u * u) * th.real()};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Frame: return "Frame";
    case Verdict::NotFrame: return "NotFrame";
    default: return "Inconclusive";
  }
}

double wiener_estimate(const Evaluator& f, int samples_per_cell) {
  require_support(f);
  double total = 0.0;
  for (long n = long(std::floor(f.lo)); n <= long(std::ceil(f.hi)); ++n) {
    double m = 0.0;
    for (int i = 0; i <= samples_per_cell; ++i)
      m = std::max(m, std::abs(f(double(n) + double(i) / samples_per_cell)));
    total += m;
  }
  return total;
}

namespace {

struct Refined {
  double u, eta, abs;
  bool converged;
};

// Levenberg-Marquardt on (Re Z, Im Z) from a grid point.
Refined refine(const Evaluator& f, double u, double eta, double cell) {
  auto res = [&](double a, double b) { return zak(f, a, b); };
  Complex z = res(u, eta);
  double mu = 1e-3;
  const double h = 1e-7;
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    if (std::abs(z) < 1e-16) {
      converged = true;
      break;
    }
    const Complex du = (res(u + h, eta) - res(u - h, eta)) / (2 * h);
    const Complex de = (res(u, eta + h) - res(u, eta - h)) / (2 * h);
    // J = [[du.re, de.re], [du.im, de.im]]
    const double a11 = std::norm(du), a12 = (std::conj(du) * de).real(), a22 = std::norm(de);
    const double g1 = (std::conj(du) * z).real(), g2 = (std::conj(de) * z).real();
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      const double b11 = a11 * (1 + mu), b22 = a22 * (1 + mu);
      const double det = b11 * b22 - a12 * a12;
      if (det == 0.0) {
        mu *= 10;
        continue;
      }
      double su = -(b22 * g1 - a12 * g2) / det, se = -(-a12 * g1 + b11 * g2) / det;
      const double len = std::hypot(su, se);
      if (len > cell) {  // stay local
        su *= cell / len;
        se *= cell / len;
      }
      const Complex zn = res(u + su, eta + se);
      if (std::abs(zn) < std::abs(z)) {
        u += su;
        eta += se;
        const bool tiny = std::hypot(su, se) < 1e-14;
        z = zn;
        mu = std::max(mu / 10, 1e-12);
        accepted = true;
        if (tiny) converged = true;
      } else {
        mu *= 10;
      }
    }
    if (!accepted || converged) {
      converged = true;
      break;
    }
  }
  return {u, eta, std::abs(z), converged};
}

}  // namespace

FrameVerdict frame_check(const Evaluator& f, int resolution, double tolerance) {
  require_support(f);
  if (resolution < 4) throw ContractError("frame_check: resolution must be >= 4");
  const int n = resolution;
  const double two_pi = 2.0 * kPi;
  std::vector<double> mag(std::size_t(n) * n);
  const long k0 = long(std::floor(-f.hi)), k1 = long(std::ceil(1.0 - f.lo));
  std::vector<Complex> samples(std::size_t(k1 - k0 + 1));
  for (int i = 0; i < n; ++i) {
    const double u = double(i) / n;
    for (long k = k0; k <= k1; ++k) {
      const double t = u - double(k);
      samples[std::size_t(k - k0)] = (t >= f.lo && t <= f.hi) ? f(t) : Complex(0.0);
    }
    for (int j = 0; j < n; ++j) {
      const double eta = two_pi * j / n;
      Complex s = 0.0;
      for (long k = k0; k <= k1; ++k) s += samples[std::size_t(k - k0)] * std::polar(1.0, double(k) * eta);
      mag[std::size_t(i) * n + j] = std::abs(s);
    }
  }
  FrameVerdict v;
  v.grid_resolution = n;
  v.tolerance = tolerance;
  v.wiener_estimate = wiener_estimate(f);
  auto at = [&](int i, int j) { return mag[std::size_t((i + n) % n) * n + std::size_t((j + n) % n)]; };
  std::size_t imin = 0;
  v.upper_bound = 0.0;
  for (std::size_t k = 0; k < mag.size(); ++k) {
    v.upper_bound = std::max(v.upper_bound, mag[k]);
    if (mag[k] < mag[imin]) imin = k;
  }
  v.lower_bound = mag[imin];
  v.min_u = double(imin / n) / n;
  v.min_eta = two_pi * double(imin % n) / n;

  // local minima over the 8-neighbourhood (|Z| is 1-periodic in u, 2pi-periodic in eta)
  std::vector<std::pair<double, std::size_t>> minima;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double m = at(i, j);
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj)
          if ((di || dj) && at(i + di, j + dj) < m) {
            is_min = false;
            break;
          }
      if (is_min) minima.push_back({m, std::size_t(i) * n + j});
    }
  std::sort(minima.begin(), minima.end());
  if (minima.size() > 8) minima.resize(8);

  bool all_converged = true;
  const double cell = 2.0 * two_pi / n;
  for (const auto& [m, idx] : minima) {
    const Refined r = refine(f, double(idx / n) / n, two_pi * double(idx % n) / n, cell);
    all_converged = all_converged && r.converged;
    if (r.abs < v.lower_bound) {
      v.lower_bound = r.abs;
      v.min_u = r.u - std::floor(r.u);
      v.min_eta = r.eta - two_pi * std::floor(r.eta / two_pi);
    }
    if (r.abs < tolerance && std::abs(zak(f, r.u, r.eta, f.hi - f.lo)) < tolerance)
      v.zero_confirmed = true;
  }
  if (v.zero_confirmed)
    v.verdict = Verdict::NotFrame;
  else if (v.lower_bound > tolerance && all_converged && std::isfinite(v.upper_bound))
    v.verdict = Verdict::Frame;
  else
    v.verdict = Verdict::Inconclusive;
  return v;
}

}  // namespace superstft::zak
