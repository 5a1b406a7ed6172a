#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace pssmp {

// Adaptive Simpson quadrature on a finite interval.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-8, int max_depth = 40);

// Smallest s in (lo_hint, inf) with g(s) > target, for increasing g.
// Expands the bracket geometrically, then bisects to relative tolerance.
double inverse_of_increasing(const std::function<double(double)>& g, double target,
                             double lo_hint = 1e-12, double rel_tol = 1e-9,
                             int max_iter = 400);

}  // namespace pssmp
