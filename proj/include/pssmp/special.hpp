#pragma once

namespace pssmp {

// Regularized incomplete gamma functions, P(a,x) + Q(a,x) = 1.
// Series expansion below x = a+1, Lentz continued fraction above,
// relative tolerance ~1e-12.
double regularized_lower_gamma(double a, double x);
double regularized_upper_gamma(double a, double x);

// Upper incomplete gamma integral  Gamma(a,x) = int_x^inf e^{-y} y^{a-1} dy,
// returned as log to avoid underflow for large x.
double log_upper_gamma_integral(double a, double x);

// Asymptotic Kolmogorov tail Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_tail(double lambda);

}  // namespace pssmp
