#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pssmp/levy_models.hpp"
#include "pssmp/stats.hpp"

namespace pssmp {

// Thrown when a simulation hits its horizon cap before satisfying its
// stopping rule; carries the partial state reached.
class HorizonError : public std::runtime_error {
  public:
    HorizonError(const std::string& what, double partial_value, double horizon)
        : std::runtime_error(what), partial_value(partial_value), horizon(horizon) {}
    double partial_value;
    double horizon;
};

struct PssmpPath {
    std::vector<double> times;   // real-time points, t_0 = 0
    std::vector<double> values;  // X_{t_k} > 0
    double x0 = 0.0;
    double alpha = 1.0;

    // Step lookup: value in force at time t (paths are piecewise constant
    // between image points under the piecewise-constant-exponent convention).
    double value_at(double t) const;
};

struct ExpFunctionalSample {
    double value;             // I at the stopping time
    double truncation_bound;  // reserve bound on the omitted tail
    double horizon_used;      // Lamperti time at stopping
};

struct LampertiOptions {
    double exponent_cap = 700.0;   // abort when alpha*xi exceeds this
    double horizon_cap = 1e5;      // Lamperti-time cap for adaptive loops
    double reserve_safety = 10.0;  // multiplier on the 1/(alpha m) tail reserve
    std::size_t max_grid_points = 1u << 26;
};

// Left-endpoint partial sums of int_0^s exp(alpha xi_u) du on the path grid.
std::vector<double> partial_exponential_functional(const LevyPath& path, double alpha,
                                                   double exponent_cap = 700.0);

// One draw of I(xi_hat) = int_0^inf exp(alpha xi_hat_u) du for the dual of the
// given model, stopped when exp(alpha xi_hat) * reserve <= rel_tol * I.
ExpFunctionalSample total_exponential_functional(const LevyModel& model, double alpha, double ds,
                                                 double rel_tol, std::uint64_t seed,
                                                 const LampertiOptions& opts = {});

// Batch version with per-sample derived seeds; deterministic for any thread count.
std::vector<ExpFunctionalSample> exp_functional_batch(const LevyModel& model, double alpha,
                                                      double ds, double rel_tol, std::size_t n,
                                                      std::uint64_t seed, int threads = 0,
                                                      const LampertiOptions& opts = {});

// tau_t = inf{s : I_s > t} by binary search, linear interpolation in I inside
// the bracketing cell.
double invert_time_change(std::span<const double> partial_I, std::span<const double> grid,
                          double t);

// X_t = x0 exp(xi_{tau(t x0^{-alpha})}) sampled at the image times of the
// simulated grid, extended until the Lamperti clock covers t_max.
PssmpPath build_pssmp_path(const LevyModel& model, double x0, double alpha, double t_max,
                           double ds, std::uint64_t seed, const LampertiOptions& opts = {});

// Same construction from an already simulated (or handcrafted) Levy path.
PssmpPath build_pssmp_path_from_levy(const LevyPath& levy, double x0, double alpha, double t_max,
                                     double exponent_cap = 700.0);

// Entrance-law marginal at time t by self-normalized importance sampling:
// points t/I_i with weights 1/I_i (alpha = 1 normalization; for alpha != 1 the
// marginal is recovered by the 1/alpha power of the sampled points).
WeightedSample sample_entrance_marginal(const LevyModel& model, double t, std::size_t n,
                                        double ds, double rel_tol, std::uint64_t seed,
                                        double alpha = 1.0, int threads = 0,
                                        const LampertiOptions& opts = {});

}  // namespace pssmp
