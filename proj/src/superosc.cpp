#include "superstft/superosc.hpp"

#include <cmath>

#include "superstft/special.hpp"

namespace superstft::superosc {

void SuperoscParams::validate() const {
  if (n < 1) throw ContractError("SuperoscParams: n must be >= 1");
  if (!std::isfinite(a)) throw ContractError("SuperoscParams: a must be finite");
}

std::vector<double> coefficients(const SuperoscParams& p) {
  p.validate();
  const double plus = 0.5 * (1.0 + p.a), minus = 0.5 * (1.0 - p.a);
  std::vector<double> c(p.n + 1);
  for (int j = 0; j <= p.n; ++j)
    c[j] = special::binomial(p.n, j) * std::pow(plus, p.n - j) * std::pow(minus, j);
  return c;
}

std::vector<double> frequencies(int n) {
  if (n < 1) throw ContractError("frequencies: n must be >= 1");
  std::vector<double> w(n + 1);
  for (int j = 0; j <= n; ++j) w[j] = 1.0 - 2.0 * j / n;
  return w;
}

Complex f_n(const SuperoscParams& p, double t) {
  p.validate();
  const Complex base(std::cos(t / p.n), p.a * std::sin(t / p.n));
  const double r = std::abs(base);
  if (r == 0.0) return 0.0;
  return std::polar(std::pow(r, p.n), p.n * std::arg(base));
}

Complex f_n_direct(const SuperoscParams& p, double t) {
  const auto c = coefficients(p);
  const auto w = frequencies(p.n);
  Complex s = 0.0;
  for (int j = 0; j <= p.n; ++j) s += c[j] * std::exp(kI * (w[j] * t));
  return s;
}

void GeneralizedSequence::validate() const {
  if (coefficients.size() != frequencies.size())
    throw ContractError("GeneralizedSequence: coefficient/frequency length mismatch");
}

double GeneralizedSequence::sup_frequency() const {
  double m = 0.0;
  for (double h : frequencies) m = std::max(m, std::abs(h));
  return m;
}

GeneralizedSequence prototypical_sequence(const SuperoscParams& p) {
  GeneralizedSequence s;
  for (double c : coefficients(p)) s.coefficients.emplace_back(c);
  s.frequencies = frequencies(p.n);
  return s;
}

Complex generalized_f(const GeneralizedSequence& seq, double t) {
  seq.validate();
  Complex s = 0.0;
  for (std::size_t j = 0; j < seq.coefficients.size(); ++j)
    s += seq.coefficients[j] * std::exp(kI * (seq.frequencies[j] * t));
  return s;
}

Complex approximating_sequence(const Window& psi, const SuperoscParams& p, double x) {
  return supershift_probe([&](double w) { return psi(x + w); }, p);
}

}  // namespace superstft::superosc
