#pragma once

#include <vector>

#include "superstft/quadrature.hpp"
#include "superstft/window.hpp"

namespace superstft::transforms {

// Rectangular (u, eta) lattice, row-major over u.
struct ComplexGrid {
  std::vector<double> u_axis;
  std::vector<double> eta_axis;
  std::vector<Complex> values;

  ComplexGrid() = default;
  ComplexGrid(std::vector<double> u, std::vector<double> eta);

  Complex& at(std::size_t i, std::size_t j) { return values[i * eta_axis.size() + j]; }
  const Complex& at(std::size_t i, std::size_t j) const {
    return values[i * eta_axis.size() + j];
  }
  void validate() const;
  // Bilinear interpolation; CoverageError outside the axes.
  Complex interpolate(double u, double eta) const;
};

struct RealGrid {
  std::vector<double> u_axis;
  std::vector<double> eta_axis;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * eta_axis.size() + j]; }
};

// count points from lo to hi inclusive
std::vector<double> linspace(double lo, double hi, std::size_t count);

// int e^{-it lambda} f(t) dt
Complex fourier(const Evaluator& f, double lambda, const QuadratureSpec& q);

// int e^{-it omega} conj(g(t-x)) f(t) dt
Complex stft(const Evaluator& f, const Window& g, double x, double omega,
             const QuadratureSpec& q);

ComplexGrid stft_grid(const Evaluator& f, const Window& g, const std::vector<double>& u_axis,
                      const std::vector<double>& eta_axis, const QuadratureSpec& q);

// |V|^2 / ||g||^2
RealGrid spectrogram(const ComplexGrid& v, const Window& g);

// Lebesgue-measure Moyal constant under F(f) = int e^{-it lambda} f:
// iint |V_g f|^2 = 2 pi ||f||^2 ||g||^2.
inline constexpr double kMoyalConstant = 2.0 * kPi;

// (1/(2 pi ||g||^2)) iint V(x,omega) e^{i omega y} g(y-x) dx domega over the grid box,
// V interpolated bilinearly at the q2d nodes.
Complex reconstruct(const ComplexGrid& v, const Window& g, double y, const QuadratureSpec& q2d);

// e^{iu eta/2} V_g g(u, eta)
Complex ambiguity(const Window& g, double u, double eta, const QuadratureSpec& q);

// A(z,t) = pi^{-3/4} e^{-(z^2+t^2)/2 + sqrt2 z t}
Complex bargmann_kernel(Complex z, double t);
Complex bargmann(const Evaluator& f, Complex z, const QuadratureSpec& q);

// int f(s) g(lambda - s) ds
Complex convolve(const Evaluator& f, const Evaluator& g, double lambda, const QuadratureSpec& q);

// int f conj(g)
Complex inner_product(const Evaluator& f, const Evaluator& g, const QuadratureSpec& q);

// <V_{g1} f1, V_{g2} f2> over [-radius, radius]^2; q1d drives the STFTs,
// q2d the plane rule.
Complex stft_plane_inner(const Evaluator& f1, const Window& g1, const Evaluator& f2,
                         const Window& g2, double radius, const QuadratureSpec& q1d,
                         const QuadratureSpec& q2d);

// STFT grid on the nodes of the q2d rule over [-radius, radius]^2.
ComplexGrid stft_plane_grid(const Evaluator& f, const Window& g, double radius,
                            const QuadratureSpec& q1d, const QuadratureSpec& q2d);

}  // namespace superstft::transforms
