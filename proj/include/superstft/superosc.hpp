#pragma once

#include <vector>

#include "superstft/core.hpp"
#include "superstft/window.hpp"

namespace superstft::superosc {

struct SuperoscParams {
  double a = 2.0;
  int n = 1;

  void validate() const;
  // |a| > 1; metadata only
  bool superoscillatory() const { return std::abs(a) > 1.0; }
};

// C_j(n,a), j = 0..n
std::vector<double> coefficients(const SuperoscParams& p);

// omega_j = 1 - 2j/n, j ascending
std::vector<double> frequencies(int n);

Complex f_n(const SuperoscParams& p, double t);
Complex f_n_direct(const SuperoscParams& p, double t);

struct GeneralizedSequence {
  std::vector<Complex> coefficients;
  std::vector<double> frequencies;

  void validate() const;
  double sup_frequency() const;
};

GeneralizedSequence prototypical_sequence(const SuperoscParams& p);

Complex generalized_f(const GeneralizedSequence& seq, double t);

// sum_j C_j psi(x + 1 - 2j/n)
Complex approximating_sequence(const Window& psi, const SuperoscParams& p, double x);

// sum_j C_j closed_form_at(omega_j)
template <class F>
Complex supershift_probe(F&& closed_form_at, const SuperoscParams& p) {
  const auto c = coefficients(p);
  const auto w = frequencies(p.n);
  Complex sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * Complex(closed_form_at(w[j]));
  return sum;
}

}  // namespace superstft::superosc
