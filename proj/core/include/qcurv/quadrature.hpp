#pragma once

#include <cmath>
#include <complex>
#include <functional>

// Adaptive Gauss-Kronrod 7/15 quadrature on finite intervals. The error of a
// panel is estimated from |K15 - G7| (QUADPACK-style damping); panels failing
// the local budget are bisected. Both real and complex integrands are
// supported; the error norm is the modulus.

namespace qcurv::quad {

struct result {
  double value = 0.0;
  double err = 0.0;  // accumulated error estimate
};

struct complex_result {
  std::complex<double> value{0.0, 0.0};
  double err = 0.0;
};

struct options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_depth = 32;  // bisection depth; throws quadrature_error if exhausted
};

// Integrate f over [a, b], a < b.
result integrate(const std::function<double(double)>& f, double a, double b,
                 const options& opt = {});
complex_result integrate(const std::function<std::complex<double>(double)>& f,
                         double a, double b, const options& opt = {});

}  // namespace qcurv::quad
