#pragma once

#include <complex>

// Special-function kernel shared by every module:
//   gamma_ratio(x, y)      Gamma(x)/Gamma(y) with pole bookkeeping, accurate to
//                          ~1e-13 relative for arguments up to 1e6 (computed as
//                          exp(lgamma(x) - lgamma(y)) with sign tracking)
//   log_gamma(z)           principal-branch log Gamma for complex z (Lanczos)
//   riemann_zeta(s)        wrapper over the C++17 special function
//   sphere_volume(n)       vol(S^n) = 2 pi^{(n+1)/2} / Gamma((n+1)/2), real n

namespace qcurv::special {

inline constexpr double pi = 3.14159265358979323846264338327950288;
// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Gamma(x)/Gamma(y) for real x, y.
//   - numerator pole only  -> gamma_pole_error
//   - denominator pole only -> 0
//   - both poles (x = -p, y = -q nonpositive integers) -> limit (-1)^{p-q} q!/p!
double gamma_ratio(double x, double y);

// log|Gamma(x)| with the sign of Gamma(x); throws gamma_pole_error at poles.
double log_abs_gamma(double x, int* sign = nullptr);

// Principal-branch log Gamma, Lanczos g=7 with reflection for Re z < 1/2.
std::complex<double> log_gamma(std::complex<double> z);
std::complex<double> gamma(std::complex<double> z);

// Riemann zeta for real s != 1.
double riemann_zeta(double s);

// Volume of the round unit n-sphere, n real > 0.
double sphere_volume(double n);

// Binomial coefficient as double (exact for the small integer ranges used).
double binomial(int n, int k);

// n! as double.
double factorial(int n);

// True if x is within tol of a nonpositive integer (a Gamma pole).
bool is_nonpositive_integer(double x, double tol = 1e-12);

}  // namespace qcurv::special
