#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pssmp/rng.hpp"

namespace pssmp {

// xi_t = 2(B_t + a t), a > 0.  The associated PSSMP is the squared Bessel
// process of dimension 2(a+1).
struct BrownianWithDrift {
    double a;
};

// xi = Y + c t with Y spectrally negative strictly stable of index beta in (1,2)
// normalized so that E exp(lambda Y_t) = exp(t lambda^beta), and c > 0.
struct StablePlusDrift {
    double beta;
    double c;
};

// xi = N, standard Poisson process. Arithmetic; kept with a flag.
struct StandardPoisson {};

// Driftless subordinator with jump measure a b e^{-bx} dx (compound Poisson,
// exponential jumps). The associated increasing PSSMP is the generalized
// Watanabe process.
struct CompoundPoissonExp {
    double a;
    double b;
};

// Driftless subordinator with jump density beta e^x / (Gamma(1-beta) (e^x-1)^{1+beta}),
// beta in (0,1). Infinite activity; small jumps below `cutoff` are replaced by
// their compensating drift. Derived quantities are cached at construction.
struct LampertiStableSubordinator {
    double beta;
    double cutoff;            // small-jump cutoff epsilon
    double small_jump_drift;  // int_0^eps x Pi(dx)
    double tail_mass;         // Pi((eps, inf)) = (e^eps - 1)^{-beta} / Gamma(1-beta)
    double mean;              // int_0^inf x Pi(dx)
};

using LevyModel = std::variant<BrownianWithDrift, StablePlusDrift, StandardPoisson,
                               CompoundPoissonExp, LampertiStableSubordinator>;

LevyModel make_brownian_with_drift(double a);
LevyModel make_stable_plus_drift(double beta, double c);
LevyModel make_standard_poisson();
LevyModel make_compound_poisson_exp(double a, double b);
// neglected_var_tol bounds the variance of the dropped small jumps per unit time.
LevyModel make_lamperti_stable(double beta, double neglected_var_tol = 1e-6);

std::string model_name(const LevyModel& model);

enum class PathSign { Forward, Dual };

struct LevyPath {
    std::vector<double> grid;    // Lamperti-time points, s_0 = 0, strictly increasing
    std::vector<double> values;  // xi_{s_k}, xi_0 = 0
    std::optional<LevyModel> model;
    PathSign sign = PathSign::Forward;
};

// Laplace exponent psi(lambda) with E exp(lambda xi_t) = exp(t psi(lambda)).
// Returns +infinity when the exponential moment diverges. lambda must be >= 0.
double laplace_exponent(const LevyModel& model, double lambda);

// m = E xi_1 = psi'(0+).
double drift_mean(const LevyModel& model);

// One exact draw of xi_{s+ds} - xi_s (small-jump compensation for the
// Lamperti-stable subordinator).
double sample_increment(const LevyModel& model, double ds, Rng& rng);

struct SimulateOptions {
    std::size_t max_grid_points = 1u << 26;
};

// Path on the uniform grid {0, ds, ..., ~s_max} with independent exact
// increments; Dual negates the values. Deterministic given arguments.
LevyPath simulate_path(const LevyModel& model, double ds, double s_max, PathSign sign,
                       std::uint64_t seed, const SimulateOptions& opts = {});

struct ConditionHReport {
    bool mean_positive;
    bool mean_finite;
    bool arithmetic_flag;
};

ConditionHReport check_condition_h(const LevyModel& model);

// Key-value descriptor round-trip ("model = brownian_drift", "a = 1.0", ...).
std::string model_config(const LevyModel& model);
LevyModel parse_model_config(const std::string& text);

// Spectrally negative strictly stable draw (index beta in (1,2), unit scale,
// S1 parameterization) by the Chambers-Mallows-Stuck transform.
double sample_spectrally_negative_stable(double beta, Rng& rng);

namespace detail {
// Pure-jump models admit a cell-skipping stepper that reproduces the uniform
// grid semantics exactly in law.
bool is_pure_jump(const LevyModel& model);
double jump_rate(const LevyModel& model);
double sample_jump_in_cell(const LevyModel& model, double mu, Rng& rng);
}  // namespace detail

}  // namespace pssmp
