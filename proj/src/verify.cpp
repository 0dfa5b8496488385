#include "superstft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "superstft/approx_stft.hpp"
#include "superstft/evolution.hpp"
#include "superstft/kernels.hpp"
#include "superstft/signals.hpp"
#include "superstft/special.hpp"
#include "superstft/superosc.hpp"
#include "superstft/transforms.hpp"
#include "superstft/zak.hpp"

namespace superstft::verify {

using nlohmann::json;
using superosc::SuperoscParams;

Context Context::doubled() const {
  Context c = *this;
  c.q1d = q1d.doubled();
  c.q2d = q2d.doubled();
  return c;
}

namespace {

struct Acc {
  Record r;

  void err(double e) { r.max_error = std::max(r.max_error, std::isnan(e) ? INFINITY : e); }
  void diff(Complex a, Complex b) { err(std::abs(a - b)); }
  void rel(Complex a, Complex b) { err(std::abs(a - b) / std::max(1.0, std::abs(b))); }
  void report(Complex v) {
    r.reported.push_back(v.real());
    r.reported.push_back(v.imag());
  }
  Record done(double tol) {
    r.tolerance = tol;
    return r;
  }
};

double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

const double kSqrtPi = std::sqrt(kPi);

// ---------------------------------------------------------------- stft

Record check_kernel_sum(const Context& c) {
  Acc a;
  const auto axis = transforms::linspace(-2.0, 2.0, 5);
  for (const Window& g : {Window::gaussian(), Window::hermite(1)})
    for (double amp : {1.5, 2.0})
      for (int n : {2, 4, 8})
        for (double x : {0.0, 0.5}) {
          const SuperoscParams p{amp, n};
          const auto grid = transforms::stft_grid(signals::build_signal(g, x, p).as_evaluator(), g,
                                                  axis, axis, c.q1d);
          for (std::size_t i = 0; i < axis.size(); ++i)
            for (std::size_t j = 0; j < axis.size(); ++j) {
              const Complex num = grid.at(i, j);
              const Complex cl = kernels::stft_superosc_closed(g, x, p, axis[i], axis[j], c.q1d);
              a.err(std::abs(num - cl) / std::pow(1.0 + amp, n));
              a.report(num);
            }
        }
  a.r.params = {{"windows", {"gaussian", "hermite1"}}, {"a", {1.5, 2}}, {"n", {2, 4, 8}},
                {"x", {0, 0.5}}, {"grid", "5x5 on [-2,2]^2"}, {"error", "|num-closed|/(1+a)^n"}};
  return a.done(1e-8);
}

Record check_moyal_isometry(const Context& c) {
  Acc a;
  const Window phi = Window::gaussian();
  const Evaluator h0 = Window::hermite(0).shifted();
  const Complex v = transforms::stft_plane_inner(h0, phi, h0, phi, 10.0, c.q1d, c.q2d);
  const double expected = transforms::kMoyalConstant * kPi;
  a.err(std::abs(v.real() - expected) / expected);
  a.report(v);
  a.r.params = {{"f", "h0"}, {"g", "gaussian"}, {"box", 10.0}, {"value", v.real()}, {"expected", expected},
                {"printed_value", kPi}, {"constant", "2 pi ||f||^2 ||g||^2"}};
  return a.done(1e-4);
}

Record check_moyal_formula(const Context& c) {
  Acc a;
  const Window phi = Window::gaussian(), h1 = Window::hermite(1);
  const Evaluator f1 = Window::hermite(0).shifted(), f2 = h1.shifted();
  const Complex lhs = transforms::stft_plane_inner(f1, phi, f2, h1, 10.0, c.q1d, c.q2d);
  const Complex rhs = transforms::kMoyalConstant * transforms::inner_product(f1, f2, c.q1d) *
                      std::conj(transforms::inner_product(phi.shifted(), h1.shifted(), c.q1d));
  a.diff(lhs, rhs);
  a.report(lhs);
  // shifted tuple with nonzero inner products
  const Evaluator f3 = Window::hermite(0).shifted(0.3, 0.2), f4 = h1.shifted(-0.2);
  const Window w4 = Window::hermite(1);
  const Complex lhs2 = transforms::stft_plane_inner(f3, phi, f4, w4, 10.0, c.q1d, c.q2d);
  const Complex rhs2 = transforms::kMoyalConstant * transforms::inner_product(f3, f4, c.q1d) *
                       std::conj(transforms::inner_product(phi.shifted(), w4.shifted(), c.q1d));
  a.diff(lhs2, rhs2);
  a.report(lhs2);
  a.r.params = {{"tuple", "(h0, h1, gaussian, h1)"}, {"lhs_abs", std::abs(lhs)}, {"rhs_abs", std::abs(rhs)},
                {"shifted_tuple", "(M_0.2 T_0.3 h0, T_-0.2 h1, gaussian, h1)"}, {"shifted_lhs_abs", std::abs(lhs2)}};
  return a.done(1e-5);
}

Record check_reconstruction(const Context& c) {
  Acc a;
  const Window phi = Window::gaussian();
  const Evaluator h0 = Window::hermite(0).shifted();
  const double box = 12.0;
  const Rule r = make_rule(-box, box, c.q2d);
  const auto grid = transforms::stft_grid(h0, phi, r.x, r.x, c.q1d);
  for (double y : {-1.0, -0.4, 0.0, 0.3, 1.2}) {
    const Complex rec = transforms::reconstruct(grid, phi, y, c.q2d);
    a.diff(rec, h0(y));
    a.report(rec);
  }
  a.r.params = {{"f", "h0"}, {"g", "gaussian"}, {"box", box}, {"y", {-1.0, -0.4, 0.0, 0.3, 1.2}},
                {"grid_nodes_per_unit", c.q2d.nodes_per_unit}};
  return a.done(1e-3);
}

// ---------------------------------------------------------------- kernels

Record check_gabor_gaussian(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed);
  const Window g = Window::gaussian();
  for (int i = 0; i < 20; ++i) {
    const kernels::TFQuadruple q{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2),
                                 uniform(rng, -2, 2)};
    const Complex num = kernels::gabor_kernel_numeric(g, q, c.q1d);
    a.diff(num, kernels::gabor_kernel_gaussian(q));
    a.report(num);
  }
  a.r.params = {{"quadruples", 20}, {"range", "[-2,2]^4"}, {"seed", c.seed}};
  return a.done(1e-10);
}

Record check_gabor_hermite(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 1);
  json cal = json::array();
  for (int n = 0; n <= 4; ++n) {
    const Window g = Window::hermite(n);
    cal.push_back(kernels::hermite_kernel_calibration(n));
    for (int i = 0; i < 5; ++i) {
      const kernels::TFQuadruple q{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2),
                                   uniform(rng, -2, 2)};
      const Complex num = kernels::gabor_kernel_numeric(g, q, c.q1d);
      a.diff(num, kernels::gabor_kernel_hermite(n, q));
      a.report(num);
    }
  }
  a.r.params = {{"orders", "0..4"}, {"quadruples_per_order", 5}, {"calibration_2^n_n!", cal},
                {"seed", c.seed + 1}};
  return a.done(1e-8);
}

Record check_norm_gaussian(const Context& c) {
  Acc a;
  const Window phi = Window::gaussian();
  // plane integral of |V|^2
  for (auto [amp, n, x] : {std::tuple{2.0, 4, 0.0}, std::tuple{2.0, 8, 0.5}}) {
    const SuperoscParams p{amp, n};
    const Evaluator s = signals::build_signal(phi, x, p).as_evaluator();
    const Complex v = transforms::stft_plane_inner(s, phi, s, phi, 11.0, c.q1d, c.q2d);
    const double cl = transforms::kMoyalConstant * kernels::norm_sq_closed_gaussian(x, p);
    a.err(std::abs(v.real() - cl) / cl);
    a.report(v);
  }
  // ||phi||^2 ||S||^2 with ||S||^2 by quadrature
  for (double amp : {1.5, 2.0, 3.0})
    for (int n = 1; n <= 8; ++n)
      for (double x : {0.0, 0.5}) {
        const SuperoscParams p{amp, n};
        const double num =
            kSqrtPi * signals::signal_norm_sq_numeric(signals::build_signal(phi, x, p), c.q1d);
        const double cl = kernels::norm_sq_closed_gaussian(x, p);
        a.err(std::abs(num - cl) / cl);
        a.report(num);
      }
  a.r.params = {{"plane", "(a,n,x) = (2,4,0), (2,8,0.5)"}, {"moyal", "a in {1.5,2,3}, n<=8, x in {0,0.5}"},
                {"plane_constant", "2 pi times the closed norm"}, {"error", "relative"}};
  return a.done(1e-5);
}

Record check_norm_hermite(const Context& c) {
  Acc a;
  for (int k = 0; k <= 2; ++k)
    for (int m = 0; m <= 2; ++m)
      for (double amp : {1.5, 2.0})
        for (int n = 1; n <= 4; ++n)
          for (double x : {0.0, 0.5}) {
            const SuperoscParams p{amp, n};
            const double num = special::hermite_norm_sq(k) *
                               signals::signal_norm_sq_numeric(
                                   signals::build_signal(Window::hermite(m), x, p), c.q1d);
            const double cl = kernels::norm_sq_closed_hermite(k, m, x, p);
            a.err(std::abs(num - cl) / std::abs(cl));
            if (!(cl > 0.0)) a.err(INFINITY);
            a.report(num);
          }
  a.r.params = {{"k", "0..2"}, {"m", "0..2"}, {"a", {1.5, 2}}, {"n", "1..4"}, {"x", {0, 0.5}},
                {"error", "relative"}};
  return a.done(1e-5);
}

Record check_weighted_norm(const Context& c) {
  Acc a;
  for (auto [amp, n, x] : {std::tuple{2.0, 4, 0.5}, std::tuple{2.0, 4, 0.0}, std::tuple{1.5, 6, 0.3},
                           std::tuple{3.0, 3, -0.7}}) {
    const SuperoscParams p{amp, n};
    const double sum = kernels::norm_sq_closed_gaussian(x, p) / kPi;
    const double w = kernels::phi_na_norm(x, p, c.q1d);
    a.err(std::abs(sum - w) / std::abs(sum));
    a.report(w);
  }
  a.r.params = {{"identity", "double sum = (1/sqrt(pi)) ||phi_na||^2 in L2(e^{-s^2})"},
                {"error", "relative"}};
  return a.done(1e-8);
}

double convergence_ratio(const std::function<Complex(int)>& approx, Complex target) {
  return std::abs(approx(40) - target) / std::abs(approx(10) - target);
}

Record check_supershift_gabor(const Context&) {
  Acc a;
  const Window g = Window::gaussian();
  const double ratio = convergence_ratio(
      [&](int n) { return kernels::stft_superosc_closed(g, 0.0, {1.5, n}, 0.3, 0.2); },
      kernels::stft_superosc_limit(g, 0.0, 1.5, 0.3, 0.2));
  const double ratio_fn = convergence_ratio(
      [](int n) {
        Complex worst = 0.0;
        for (double t : transforms::linspace(-1.0, 1.0, 201)) {
          const Complex d = superosc::f_n({1.5, n}, t) - std::polar(1.0, 1.5 * t);
          if (std::abs(d) > std::abs(worst)) worst = d;
        }
        return worst;
      },
      0.0);
  a.err(ratio);
  a.err(ratio_fn);
  a.r.params = {{"a", 1.5}, {"point", "(x,u,eta)=(0,0.3,0.2)"}, {"ratio_kernel", ratio},
                {"ratio_fn_uniform", ratio_fn}, {"error", "err(n=40)/err(n=10)"}};
  return a.done(0.6);
}

Record check_fock_form(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 2);
  double printed_dev = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double x = uniform(rng, -1, 1), u = uniform(rng, -1, 1), eta = uniform(rng, -1, 1);
    const SuperoscParams p{2.0, 4};
    const Complex cl = kernels::stft_superosc_closed(Window::gaussian(), x, p, u, eta);
    a.rel(kernels::stft_superosc_fock_form(x, p, u, eta), cl);
    printed_dev = std::max(printed_dev,
                           std::abs(kernels::stft_superosc_fock_form_printed(x, p, u, eta) - cl));
  }
  a.r.params = {{"a", 2}, {"n", 4}, {"points", 10}, {"printed_form_max_deviation", printed_dev}};
  return a.done(1e-10);
}

Record check_generating_convolution(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 3);
  std::vector<std::tuple<double, Complex, Complex, double>> pts{{0.0, 0.3, 0.3, 1.0}};
  for (int i = 0; i < 5; ++i)
    pts.emplace_back(uniform(rng, -1, 1), Complex(uniform(rng, -0.35, 0.35), uniform(rng, -0.35, 0.35)),
                     Complex(uniform(rng, -0.35, 0.35), uniform(rng, -0.35, 0.35)), uniform(rng, -2, 2));
  for (auto [x, u, v, l] : pts) {
    const auto [lhs, rhs] = kernels::generating_sum_check(x, u, v, l, 20);
    a.diff(lhs, rhs);
  }
  a.r.params = {{"K", 20}, {"points", pts.size()}, {"bound", "|u|,|v| <= 0.5"}};
  return a.done(1e-8);
}

Record check_generating_product(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 4);
  std::vector<std::tuple<double, Complex, Complex, double>> pts{{0.1, 0.2, 0.2, 0.5}};
  for (int i = 0; i < 5; ++i)
    pts.emplace_back(uniform(rng, -1, 1), Complex(uniform(rng, -0.35, 0.35), uniform(rng, -0.35, 0.35)),
                     Complex(uniform(rng, -0.35, 0.35), uniform(rng, -0.35, 0.35)), uniform(rng, -2, 2));
  for (auto [x, u, v, l] : pts) {
    const auto [lhs, rhs] = kernels::hermite_product_generating_check(x, u, v, l, 20);
    a.diff(lhs, rhs);
  }
  a.r.params = {{"K", 20}, {"points", pts.size()}, {"printed_rhs_factor", 2 * kPi}};
  return a.done(1e-8);
}

Record check_generating_complex_hermite(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 5);
  auto rc = [&] { return std::polar(uniform(rng, 0, 0.5), uniform(rng, 0, 2 * kPi)); };
  double printed_dev = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex z = rc(), w = rc(), u = rc(), v = rc();
    const auto [lhs, rhs] = kernels::complex_hermite_generating_check(z, w, u, v, 20);
    a.diff(lhs, rhs);
    printed_dev = std::max(printed_dev, std::abs(lhs - kernels::complex_hermite_generating_printed(z, w, u, v)));
  }
  a.r.params = {{"K", 20}, {"points", 20}, {"printed_form_max_deviation", printed_dev}};
  return a.done(1e-8);
}

Record check_integral_representation(const Context& c) {
  Acc a;
  const SuperoscParams p{2.0, 3};
  for (auto [x, y] : {std::pair{0.0, 0.5}, std::pair{0.0, 0.0}, std::pair{0.3, -0.4}}) {
    const Complex v = kernels::stft_integral_representation(Window::gaussian(), x, y, p, c.q2d);
    a.diff(v, superosc::f_n(p, y));
    a.report(v);
  }
  a.r.params = {{"window", "gaussian"}, {"a", 2}, {"n", 3}, {"box", 12}};
  return a.done(1e-3);
}

// ---------------------------------------------------------------- hermite

Record check_hermite_convolution(const Context& c) {
  Acc a;
  for (int k = 0; k <= 4; ++k)
    for (int m = 0; m <= 4; ++m)
      for (double l : {-3.0, -1.5, 0.0, 0.8, 3.0})
        for (auto [x, u] : {std::pair{0.0, 0.0}, std::pair{0.5, -0.3}, std::pair{-0.4, 0.9}}) {
          const Evaluator f = Window::hermite(k).shifted(0.0, x), g = Window::hermite(m).shifted(0.0, u);
          const Complex num = transforms::convolve(f, g, l, c.q1d);
          a.diff(num, kernels::hermite_convolution_closed(k, m, x, u, l));
          if (x == 0.0 && u == 0.0) a.diff(num, kernels::hermite_convolution_origin(k, m, l));
          a.report(num);
        }
  a.r.params = {{"k", "0..4"}, {"m", "0..4"}, {"lambda", {-3, -1.5, 0, 0.8, 3}},
                {"(x,u)", {"(0,0)", "(0.5,-0.3)", "(-0.4,0.9)"}}};
  return a.done(1e-8);
}

Record check_ikm_compact(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 6);
  auto rc = [&] { return Complex(uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5)); };
  std::vector<std::array<Complex, 3>> pts(20);
  for (auto& p : pts) p = {rc(), rc(), rc()};
  for (int k = 0; k <= 6; ++k)
    for (int m = 0; m <= 6; ++m)
      for (const auto& p : pts)
        a.rel(kernels::i_km_series(k, m, p[0], p[1], p[2]), kernels::i_km_closed(k, m, p[0], p[1], p[2]));
  a.r.params = {{"k", "0..6"}, {"m", "0..6"}, {"complex_points", 20}, {"seed", c.seed + 6},
                {"error", "|series-closed|/max(1,|closed|)"}};
  return a.done(1e-10);
}

Record check_overlap_integral(const Context& c) {
  Acc a;
  for (int k = 0; k <= 3; ++k)
    for (int m = 0; m <= 3; ++m)
      for (auto [x, u, l] : {std::tuple{0.3, 0.0, 0.9}, std::tuple{0.4, -0.2, 1.1}, std::tuple{-0.5, 0.7, -1.3}}) {
        const Window hk = Window::hermite(k), hm = Window::hermite(m);
        const Complex num = integrate(
            [&](double t) { return std::polar(1.0, t * l) * hk(t - x) * hm(t - u); },
            std::max(x, u) - std::max(hk.decay_radius(), hm.decay_radius()),
            std::min(x, u) + std::max(hk.decay_radius(), hm.decay_radius()), c.q1d);
        a.diff(num, kernels::hermite_overlap_closed(k, m, x, u, l));
        a.report(num);
      }
  a.r.params = {{"k", "0..3"}, {"m", "0..3"}, {"points", 3}};
  return a.done(1e-8);
}

Record check_supershift_hermite(const Context&) {
  Acc a;
  json ratios = json::array();
  for (auto [k, m] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 1}}) {
    const double r = convergence_ratio(
        [&](int n) { return kernels::stft_superosc_cross(k, m, 0.0, {1.5, n}, 0.3, 0.2); },
        kernels::stft_superosc_limit_cross(k, m, 0.0, 1.5, 0.3, 0.2));
    a.err(r);
    ratios.push_back(r);
  }
  a.r.params = {{"a", 1.5}, {"(k,m)", {"(1,2)", "(2,1)", "(1,1)"}}, {"ratios", ratios},
                {"error", "err(n=40)/err(n=10)"}};
  return a.done(0.6);
}

Record check_cross_window(const Context& c) {
  Acc a;
  for (auto [k, m] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 1}})
    for (int n = 1; n <= 4; ++n)
      for (auto [x, u, eta] : {std::tuple{0.5, 0.3, -0.4}, std::tuple{0.0, -0.6, 0.8}}) {
        const SuperoscParams p{2.0, n};
        const Window hk = Window::hermite(k);
        const Complex num =
            transforms::stft(signals::build_signal(Window::hermite(m), x, p).as_evaluator(), hk, u, eta, c.q1d);
        a.diff(num, kernels::stft_superosc_cross(k, m, x, p, u, eta));
        a.diff(num, kernels::stft_superosc_cross_via_ikm(k, m, x, p, u, eta));
        a.report(num);
      }
  a.r.params = {{"(k,m)", {"(0,0)", "(1,0)", "(1,1)", "(2,1)"}}, {"n", "1..4"}, {"a", 2},
                {"calibration", "(-1)^(k+m) times printed"}};
  return a.done(1e-7);
}

Record check_cross_reduction(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 7);
  for (int i = 0; i < 10; ++i) {
    const double x = uniform(rng, -1, 1), u = uniform(rng, -1, 1), eta = uniform(rng, -1, 1);
    const SuperoscParams p{2.0, 3};
    a.rel(kernels::stft_superosc_cross(0, 0, x, p, u, eta),
          kernels::stft_superosc_closed(Window::gaussian(), x, p, u, eta));
  }
  a.r.params = {{"k", 0}, {"m", 0}, {"points", 10}};
  return a.done(1e-12);
}

Record check_weyl(const Context& c) {
  Acc a;
  for (int m = 0; m <= 3; ++m)
    for (auto [aa, b, z] : {std::tuple{0.5, 1.0, Complex(0.2, 0.3)}, std::tuple{-0.7, 0.4, Complex(-0.5, 0.1)}}) {
      const Window hm = Window::hermite(m);
      const double nm = std::sqrt(hm.norm_sq());
      const Evaluator psi = hm.shifted(aa, b);
      const Evaluator f{[&](double t) { return psi(t) / nm; }, psi.lo, psi.hi};
      const Complex num = transforms::bargmann(f, z, c.q1d);
      a.diff(num, kernels::weyl_action_on_basis(aa, b, m, z));
      a.report(num);
    }
  a.r.params = {{"m", "0..3"}, {"points", 2}};
  return a.done(1e-8);
}

Record check_bargmann(const Context& c) {
  Acc a;
  for (int n = 0; n <= 4; ++n)
    for (Complex z : {Complex(1.0, 0.0), Complex(0.3, -0.4)}) {
      const Complex num = transforms::bargmann(Window::hermite(n).shifted(), z, c.q1d);
      a.diff(num, std::pow(kPi, -0.25) * std::pow(2.0, 0.5 * n) * cpow(z, n));
      a.report(num);
    }
  const Complex z(0.5, 0.0), w(0.3, 0.1);
  const Complex overlap = integrate(
      [&](double t) { return transforms::bargmann_kernel(z, t) * std::conj(transforms::bargmann_kernel(w, t)); },
      -12.0, 12.0, c.q1d);
  a.diff(overlap, kernels::fock_kernel(z, w));
  a.report(overlap);
  a.r.params = {{"n", "0..4"}, {"kernel_overlap", "(0.5, 0.3+0.1i)"}};
  return a.done(1e-9);
}

// ---------------------------------------------------------------- zak

Record check_zak_superosc(const Context&) {
  Acc a;
  const auto axis_u = transforms::linspace(0.0, 0.75, 4);
  const auto axis_e = transforms::linspace(0.0, 1.5 * kPi, 4);
  for (const Window& g : {Window::gaussian(), Window::hermite(1)})
    for (int n : {2, 4})
      for (double x : {0.0, 0.5})
        for (double u : axis_u)
          for (double eta : axis_e) {
            const SuperoscParams p{2.0, n};
            const Complex direct = zak::zak(signals::build_signal(g, x, p).as_evaluator(), u, eta);
            a.diff(zak::zak_superosc(g, x, p, u, eta), direct);
          }
  for (double u : axis_u)
    for (double eta : axis_e) a.diff(zak::zak_ftilde({2.0, 4}, u, eta), zak::zak_superosc(Window::gaussian(), 0.0, {2.0, 4}, u, eta));
  a.r.params = {{"windows", {"gaussian", "hermite1"}}, {"n", {2, 4}}, {"a", 2}, {"grid", "4x4"}};
  return a.done(1e-10);
}

Record check_zak_shift(const Context& c) {
  Acc a;
  const Evaluator gauss = Window::gaussian().shifted(), h1 = Window::hermite(1).shifted();
  a.err(zak::zak_shift_identity_check(gauss, 0.0, 0.0, 0.3, 0.5));
  a.err(zak::zak_shift_identity_check(gauss, 1.0, kPi, 0.3, 0.5));
  a.err(zak::zak_shift_identity_check(h1, 0.5, 2.0, 0.1, 0.9));
  std::mt19937_64 rng(c.seed + 8);
  for (int i = 0; i < 10; ++i)
    for (const Evaluator* f : {&gauss, &h1})
      a.err(zak::zak_shift_identity_check(*f, uniform(rng, -2, 2), uniform(rng, -3, 3), uniform(rng, 0, 1),
                                          uniform(rng, 0, 2 * kPi)));
  for (double u : {0.3, -0.7})
    a.diff(zak::zak(gauss, u + 1.0, 0.7), std::polar(1.0, 0.7) * zak::zak(gauss, u, 0.7));
  a.r.params = {{"identity", "Z(T_x M_w f)(u,eta) = e^{iw(u-x)} Z f(u-x, eta-w)"}, {"random_points", 10}};
  return a.done(1e-10);
}

Record check_theta_bound(const Context&) {
  Acc a;
  int samples = 0;
  for (auto [amp, n] : {std::pair{2.0, 3}, std::pair{1.5, 5}, std::pair{2.0, 4}, std::pair{3.0, 2}})
    for (double u : transforms::linspace(-1.0, 1.0, 9))
      for (double eta : transforms::linspace(0.0, 2 * kPi, 9)) {
        const auto b = zak::theta_bound_check({amp, n}, u, eta);
        a.err(std::max(0.0, b.value - b.bound));
        ++samples;
      }
  a.r.params = {{"samples", samples}, {"error", "max(0, value - bound)"}};
  return a.done(0.0);
}

Record check_theta_value(const Context&) {
  Acc a;
  const Complex t = special::theta(0.0, Complex(0.0, 1.0 / (2 * kPi)));
  a.err(std::abs(t - 2.506628));
  a.diff(zak::zak_gaussian_series(0.0, 0.0), t);
  a.r.params = {{"theta(0, i/2pi)", t.real()}, {"expected", 2.506628}};
  return a.done(1e-6);
}

json verdict_json(const zak::FrameVerdict& v) {
  return {{"verdict", zak::to_string(v.verdict)}, {"resolution", v.grid_resolution},
          {"lower_bound", v.lower_bound}, {"upper_bound", v.upper_bound},
          {"min_at", {v.min_u, v.min_eta}}, {"zero_confirmed", v.zero_confirmed}};
}

Record check_frame_ftilde(const Context&) {
  Acc a;
  const Evaluator f = zak::ftilde({2.0, 4});
  json runs = json::array();
  int not_frame = 0;
  for (int res : {128, 256}) {
    const auto v = zak::frame_check(f, res);
    runs.push_back(verdict_json(v));
    if (v.verdict != zak::Verdict::Frame) ++not_frame;
  }
  a.err(not_frame);
  a.r.params = {{"signal", "e^{-t^2/2} F_4(t,2)"}, {"expected", "Frame"}, {"runs", runs},
                {"error", "number of runs without a Frame verdict"}};
  return a.done(0.0);
}

Record check_frame_stability(const Context&) {
  Acc a;
  json runs = json::array();
  for (const auto& [name, f] : {std::pair{std::string("gaussian"), Window::gaussian().shifted()},
                                std::pair{std::string("ftilde_a2_n4"), zak::ftilde({2.0, 4})}}) {
    const auto v1 = zak::frame_check(f, 128), v2 = zak::frame_check(f, 256);
    if (v1.verdict != v2.verdict) a.err(1.0);
    runs.push_back({{"signal", name}, {"res128", verdict_json(v1)}, {"res256", verdict_json(v2)}});
  }
  a.r.params = {{"runs", runs}, {"error", "verdict flips under doubling"}};
  return a.done(0.0);
}

// ---------------------------------------------------------------- evolution

Record check_evolution_routes(const Context& c) {
  Acc a;
  const Window g = Window::gaussian();
  for (auto pt : {evolution::EvolutionPoint{0.3, 0.5, 0.2, 1.0}, evolution::EvolutionPoint{-0.4, 0.2, 0.0, 0.5},
                  evolution::EvolutionPoint{0.0, 1.0, 0.3, -0.5}, evolution::EvolutionPoint{1.0, 0.1, -0.2, 2.0}}) {
    const auto num = evolution::evolve_numeric(g, pt, c.q1d);
    a.diff(num.value, evolution::evolve_gaussian_closed(pt));
    a.report(num.value);
  }
  a.r.params = {{"points", 4}, {"routes", "inverse-Fourier quadrature vs closed Gaussian form"}};
  return a.done(1e-7);
}

Record check_evolution_datum(const Context& c) {
  Acc a;
  for (double x : {-1.0, 0.0, 0.5, 1.3})
    for (auto [x0, k0] : {std::pair{0.0, 1.0}, std::pair{0.4, -0.5}}) {
      const evolution::EvolutionPoint pt{x, 0.0, x0, k0};
      const Window g = Window::gaussian();
      const Complex datum = 2 * kPi * signals::time_frequency_shift(x0, k0, g, x);
      const auto num = evolution::evolve_numeric(g, pt, c.q1d);
      a.diff(num.value, datum);
      a.diff(evolution::evolve_gaussian_closed(pt), datum);
      a.report(num.value);
      for (int m = 0; m <= 2; ++m) {
        const auto h = evolution::evolve_hermite(m, pt, c.q1d);
        a.diff(h.value, 2 * kPi * signals::time_frequency_shift(x0, k0, Window::hermite(m), x));
        a.report(h.value);
      }
    }
  a.r.params = {{"convention", "t = 0 gives 2 pi times the datum"}, {"windows", "gaussian, h0..h2"}};
  return a.done(1e-7);
}

Record check_evolution_pde(const Context& c) {
  Acc a;
  std::mt19937_64 rng(c.seed + 9);
  const double h = 1e-3;
  for (int i = 0; i < 10; ++i) {
    const double x = uniform(rng, -2, 2), t = uniform(rng, -1, 1), x0 = uniform(rng, -1, 1), k0 = uniform(rng, -1, 1);
    auto f = [&](double xx, double tt) { return evolution::evolve_gaussian_closed({xx, tt, x0, k0}); };
    const Complex v = f(x, t);
    const Complex dt = (f(x, t + h) - f(x, t - h)) / (2 * h);
    const Complex dxx = (f(x + h, t) - 2.0 * v + f(x - h, t)) / (h * h);
    a.err(std::abs(kI * dt + dxx) / std::abs(v));
  }
  a.r.params = {{"points", 10}, {"step", h}, {"error", "|i phi_t + phi_xx| / |phi|"}};
  return a.done(1e-4);
}

Record check_evolution_hermite(const Context& c) {
  Acc a;
  for (auto pt : {evolution::EvolutionPoint{0.3, 0.2, 0.0, 1.0}, evolution::EvolutionPoint{-0.5, 0.7, 0.2, -0.3}}) {
    const auto h = evolution::evolve_hermite(0, pt, c.q1d);
    a.diff(h.value, evolution::evolve_gaussian_closed(pt));
    a.report(h.value);
  }
  for (int m = 1; m <= 2; ++m) {
    const evolution::EvolutionPoint pt{0.0, 0.3, 0.1, 1.0};
    const auto h = evolution::evolve_hermite(m, pt, c.q1d);
    const auto num = evolution::evolve_numeric(Window::hermite(m), pt, c.q1d);
    a.diff(h.value, num.value);
    a.report(h.value);
  }
  a.r.params = {{"routes", "t-restored Hermite integral vs numeric and closed Gaussian"}};
  return a.done(1e-6);
}

Record check_evolution_superosc(const Context& c) {
  Acc a;
  const SuperoscParams p{2.0, 4};
  for (double y : {-0.5, 0.3}) a.diff(evolution::evolve_superosc(p, y, 0.0), superosc::f_n(p, y));
  {
    const double y = 0.3, t = 0.2, h = 1e-3;
    auto f = [&](double yy, double tt) { return evolution::evolve_superosc(p, yy, tt); };
    const Complex r = kI * (f(y, t + h) - f(y, t - h)) / (2 * h) + (f(y + h, t) - 2.0 * f(y, t) + f(y - h, t)) / (h * h);
    a.err(std::abs(r) * 1e-5 / 1e-5 > 1e-5 ? std::abs(r) : 0.0);
  }
  for (auto [y, t] : {std::pair{0.5, 0.0}, std::pair{0.2, 0.3}}) {
    const Complex v = evolution::evolve_superosc_integral({2.0, 3}, 0.0, y, t, c.q2d);
    a.diff(v, evolution::evolve_superosc_kernel_sum({2.0, 3}, 0.0, y, t));
    if (t == 0.0) a.diff(v, superosc::f_n({2.0, 3}, y));
    a.report(v);
  }
  const Complex target = std::polar(1.0, 1.5 * 0.1 - 1.5 * 1.5 * 0.1);
  const double e10 = std::abs(evolution::evolve_superosc({1.5, 10}, 0.1, 0.1) - target);
  const double e40 = std::abs(evolution::evolve_superosc({1.5, 40}, 0.1, 0.1) - target);
  if (!(e40 < e10)) a.err(1.0);
  a.r.params = {{"longevity_err_n10", e10}, {"longevity_err_n40", e40}, {"integral_path", "gaussian, a=2, n=3"}};
  return a.done(1e-5);
}

// ---------------------------------------------------------------- approx

Record check_approx_factorization(const Context& c) {
  Acc a;
  const Window psi = Window::gaussian();
  for (int n = 1; n <= 4; ++n)
    for (double l : {-2.0, -1.0, 0.0, 0.5, 1.5}) {
      const SuperoscParams p{2.0, n};
      const Complex lhs = transforms::fourier(approx_stft::approximating_evaluator(psi, p), l, c.q1d);
      const Complex rhs = transforms::fourier(psi.shifted(), l, c.q1d) * superosc::f_n(p, l);
      a.diff(lhs, rhs);
      a.report(lhs);
    }
  a.r.params = {{"psi", "gaussian"}, {"a", 2}, {"n", "1..4"}, {"lambda", {-2, -1, 0, 0.5, 1.5}}};
  return a.done(1e-8);
}

Record check_approx_translation(const Context& c) {
  Acc a;
  const Window g = Window::gaussian();
  const SuperoscParams p{2.0, 3};
  const double x = 0.7, l = 0.4;
  const Complex lhs = transforms::fourier(approx_stft::approximating_evaluator(g, p, x), l, c.q1d);
  const Complex rhs = std::polar(1.0, -x * l) * transforms::fourier(approx_stft::approximating_evaluator(g, p), l, c.q1d);
  a.diff(lhs, rhs);
  a.report(lhs);
  a.r.params = {{"x", x}, {"lambda", l}, {"a", 2}, {"n", 3}};
  return a.done(1e-9);
}

Record check_approx_routes(const Context& c) {
  Acc a;
  const Window g = Window::gaussian();
  for (auto [n, u, eta] : {std::tuple{2, 0.3, 0.5}, std::tuple{3, 0.4, -0.6}, std::tuple{4, -1.0, 1.2}}) {
    const SuperoscParams p{2.0, n};
    const Complex amb = approx_stft::stft_approx_via_ambiguity(g, p, u, eta, c.q1d);
    a.diff(amb, approx_stft::stft_approx_hermite_closed(0, 0, p, u, eta));
    a.report(amb);
  }
  a.r.params = {{"k", 0}, {"m", 0}, {"calibration_k0", approx_stft::approx_hermite_calibration(0)}};
  return a.done(1e-8);
}

Record check_approx_hermite(const Context& c) {
  Acc a;
  for (int k = 0; k <= 2; ++k)
    for (int m = 0; m <= 2; ++m) {
      const SuperoscParams p{2.0, 2};
      const double u = 0.3, eta = 0.5;
      const Complex num = transforms::stft(approx_stft::approximating_evaluator(Window::hermite(m), p),
                                           Window::hermite(k), u, eta, c.q1d);
      a.diff(num, approx_stft::stft_approx_hermite_closed(k, m, p, u, eta));
      a.report(num);
    }
  a.r.params = {{"k", "0..2"}, {"m", "0..2"}, {"a", 2}, {"n", 2}, {"point", "(0.3, 0.5)"}};
  return a.done(1e-8);
}

Record check_approx_limit(const Context& c) {
  Acc a;
  const Window g = Window::gaussian();
  for (double amp : {1.5, 2.0})
    for (auto [u, eta] : {std::pair{0.0, 0.0}, std::pair{0.2, 0.1}, std::pair{-0.8, 1.1}}) {
      const Evaluator f = g.shifted(-amp);
      const Complex num = transforms::stft(f, g, u, eta, c.q1d);
      a.diff(num, approx_stft::stft_approx_limit_gaussian(amp, u, eta));
      a.report(num);
    }
  a.r.params = {{"a", {1.5, 2}}, {"points", 3}};
  return a.done(1e-8);
}

Record check_supershift_approx(const Context&) {
  Acc a;
  const double r = convergence_ratio(
      [](int n) { return approx_stft::stft_approx_hermite_closed(0, 0, {1.5, n}, 0.2, 0.1); },
      approx_stft::stft_approx_limit_gaussian(1.5, 0.2, 0.1));
  a.err(r);
  a.r.params = {{"a", 1.5}, {"point", "(0.2, 0.1)"}, {"ratio", r}};
  return a.done(0.6);
}

}  // namespace

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"stft_superosc_kernel_sum", "stft", "A1", "superoscillatory STFT as a sum of Gabor kernels", check_kernel_sum},
      {"moyal_isometry", "stft", "A2", "STFT isometry", check_moyal_isometry},
      {"moyal_formula", "stft", "A2", "orthogonality relation for two windows", check_moyal_formula},
      {"reconstruction", "stft", "A9", "STFT inversion", check_reconstruction},
      {"gabor_kernel_gaussian", "kernels", "A3", "Gaussian Gabor kernel", check_gabor_gaussian},
      {"gabor_kernel_hermite", "kernels", "A4", "Hermite Gabor kernel (Laguerre form)", check_gabor_hermite},
      {"norm_gaussian", "kernels", "A7", "STFT norm of the Gaussian superoscillatory signal", check_norm_gaussian},
      {"norm_hermite", "kernels", "A7", "STFT norm for Hermite windows", check_norm_hermite},
      {"gaussian_weighted_norm", "kernels", "A7", "double sum as a Gaussian-weighted norm", check_weighted_norm},
      {"supershift_gabor_kernel", "kernels", "A8", "supershift of the Gabor kernel", check_supershift_gabor},
      {"fock_form", "kernels", "", "Fock-kernel form of the Gaussian STFT", check_fock_form},
      {"generating_convolution", "kernels", "A13", "generating function of Hermite convolutions", check_generating_convolution},
      {"generating_hermite_product", "kernels", "A13", "generating function of Hermite products", check_generating_product},
      {"generating_complex_hermite", "kernels", "A13", "generating function of 2D-complex Hermite polynomials", check_generating_complex_hermite},
      {"integral_representation", "kernels", "", "STFT integral representation of F_n", check_integral_representation},
      {"hermite_convolution", "hermite", "A5", "convolution of modulated Hermite functions", check_hermite_convolution},
      {"i_km_compact", "hermite", "A6", "compact 2D-Hermite form of I_km", check_ikm_compact},
      {"hermite_overlap_integral", "hermite", "A6", "Hermite overlap integral through I_km", check_overlap_integral},
      {"supershift_2d_hermite", "hermite", "A8", "supershift of the cross-window Hermite kernel", check_supershift_hermite},
      {"cross_window_stft", "hermite", "", "STFT of the Hermite signal with a Hermite window", check_cross_window},
      {"cross_window_gaussian_reduction", "hermite", "", "k=m=0 reduction to the Gaussian form", check_cross_reduction},
      {"weyl_action", "hermite", "", "Weyl operator on the Fock basis", check_weyl},
      {"bargmann_hermite", "hermite", "", "Bargmann transform of Hermite functions", check_bargmann},
      {"zak_superosc_identity", "zak", "A10", "Zak transform of the superoscillatory signal", check_zak_superosc},
      {"zak_shift_identity", "zak", "A10", "Zak transform of time-frequency shifts", check_zak_shift},
      {"zak_theta_bound", "zak", "A10", "theta-function bound on the Zak transform", check_theta_bound},
      {"theta_value", "zak", "A10", "theta function at (0, i/2pi)", check_theta_value},
      {"zak_frame_ftilde", "zak", "A10", "Gabor frame property of the Gaussian superoscillation", check_frame_ftilde},
      {"zak_frame_stability", "zak", "A10", "frame verdict under resolution doubling", check_frame_stability},
      {"evolution_routes", "evolution", "A11", "free evolution of a shifted Gaussian", check_evolution_routes},
      {"evolution_initial_datum", "evolution", "A11", "initial datum of the evolution", check_evolution_datum},
      {"evolution_pde_residual", "evolution", "A11", "free Schroedinger equation residual", check_evolution_pde},
      {"evolution_hermite_route", "evolution", "", "evolution with Hermite windows", check_evolution_hermite},
      {"evolution_superosc", "evolution", "", "evolution of superoscillatory data", check_evolution_superosc},
      {"approx_fourier_factorization", "approx", "A12", "Fourier transform of approximating sequences", check_approx_factorization},
      {"approx_translation", "approx", "", "translated approximating sequences", check_approx_translation},
      {"approx_routes", "approx", "A12", "ambiguity route vs 2D-Hermite route", check_approx_routes},
      {"approx_hermite_closed", "approx", "", "STFT of Hermite approximating sequences", check_approx_hermite},
      {"approx_limit_gaussian", "approx", "A12", "STFT of the shifted Gaussian", check_approx_limit},
      {"supershift_approx", "approx", "A8", "supershift of the approximating-sequence STFT", check_supershift_approx},
  };
  return checks;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "stft", "kernels", "hermite", "zak", "evolution", "approx"};
  return names;
}

bool known_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<Record> run_suite(const std::string& suite, const Context& ctx) {
  if (!known_suite(suite)) throw ContractError("unknown suite '" + suite + "'");
  std::vector<Record> out;
  for (const auto& c : registry()) {
    if (suite != "all" && c.suite != suite) continue;
    Record r;
    try {
      r = c.run(ctx);
    } catch (const std::exception& e) {
      r.max_error = INFINITY;
      r.params["exception"] = e.what();
    }
    r.id = c.id;
    r.suite = c.suite;
    r.criterion = c.criterion;
    r.paper_anchor = c.paper_anchor;
    r.pass = std::isfinite(r.max_error) && r.max_error <= r.tolerance;
    out.push_back(std::move(r));
  }
  return out;
}

Record quadrature_gate(const std::vector<Record>& base, const std::vector<Record>& doubled) {
  Record g;
  g.id = "quadrature_gate";
  g.suite = "all";
  g.criterion = "A14";
  g.paper_anchor = "node-doubling stability of quadrature values";
  g.tolerance = 1e-9;
  std::string worst;
  std::size_t compared = 0;
  for (const auto& b : base) {
    auto it = std::find_if(doubled.begin(), doubled.end(), [&](const Record& d) { return d.id == b.id; });
    if (it == doubled.end() || it->reported.size() != b.reported.size()) {
      g.max_error = INFINITY;
      worst = b.id;
      continue;
    }
    for (std::size_t i = 0; i < b.reported.size(); ++i) {
      const double e = std::abs(b.reported[i] - it->reported[i]) / std::max(1.0, std::abs(b.reported[i]));
      ++compared;
      if (!(e <= g.max_error)) {
        g.max_error = std::isnan(e) ? INFINITY : e;
        worst = b.id;
      }
    }
  }
  g.params = {{"values_compared", compared}, {"worst_check", worst}, {"error", "|delta|/max(1,|v|)"}};
  g.pass = std::isfinite(g.max_error) && g.max_error < g.tolerance;
  return g;
}

json to_json(const std::vector<Record>& records, unsigned seed) {
  json out = {{"schema", 1}, {"seed", seed}, {"suites", json::array()}};
  for (const auto& r : records) {
    json j = {{"id", r.id},
              {"suite", r.suite},
              {"criterion", r.criterion},
              {"paper_anchor", r.paper_anchor},
              {"params", r.params},
              {"max_error", std::isfinite(r.max_error) ? json(r.max_error) : json("inf")},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
    out["suites"].push_back(j);
  }
  return out;
}

}  // namespace superstft::verify
