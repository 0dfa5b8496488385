#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace superstft {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

// Argument outside the mathematical domain (Im tau <= 0, alpha <= 0, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Caller broke an API contract (length mismatch, missing decay radius, ...).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite samples or values.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid data does not cover the region the integrand lives on.
struct CoverageError : std::runtime_error {
  CoverageError(const std::string& what, double tail)
      : std::runtime_error(what), tail_bound(tail) {}
  double tail_bound;
};

// i^k by k mod 4.
inline Complex ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// (-i)^k
inline Complex minus_ipow(int k) { return ipow(-k); }

inline double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// z^n for n >= 0 by repeated squaring; cpow(0, 0) = 1
inline Complex cpow(Complex z, int n) {
  Complex r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace superstft
