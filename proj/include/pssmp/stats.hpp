#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pssmp/rng.hpp"

namespace pssmp {

// Importance-weighted sample; weights normalized to sum 1 at construction.
struct WeightedSample {
    std::vector<double> points;
    std::vector<double> weights;

    WeightedSample() = default;
    WeightedSample(std::vector<double> pts, std::vector<double> wts);

    double effective_size() const;  // (sum w)^2 / sum w^2 after normalization
};

struct GoodnessOfFit {
    double ks_statistic;
    double p_value;
    double n_effective;
};

using Cdf = std::function<double(double)>;

GoodnessOfFit ks_test(std::vector<double> sample, const Cdf& cdf);
GoodnessOfFit ks_test(const WeightedSample& sample, const Cdf& cdf);

// Two-sample Kolmogorov-Smirnov statistic (used to compare a simulated law
// against direct draws of its claimed equal in distribution).
GoodnessOfFit ks_two_sample(std::vector<double> a, std::vector<double> b);

enum class MomentSign { Plain, Inverse };

struct MomentEstimate {
    double estimate;
    double std_error;  // jackknife standard error of the mean
};

MomentEstimate mc_moment(std::span<const double> samples, int k, MomentSign sign);

// Self-normalized weighted mean with its effective-sample-size standard error.
MomentEstimate weighted_mean(const WeightedSample& sample);

enum class TailTransform { LogLogQuadratic, LogLogLinear };

struct TailFit {
    double coefficient;
    double intercept;
    double residual;  // rms residual of the linear fit
};

// Quadratic mode: least squares of -log p on (log 1/t)^2.
// Linear mode: least squares of log p on log t.
TailFit fit_tail_exponent(std::span<const double> ts, std::span<const double> probs,
                          TailTransform transform);

struct GammaTools {
    double shape;
    double rate;
    double cdf(double x) const;
    double sample(Rng& rng) const;  // Marsaglia-Tsang, boosted for shape < 1
};

GammaTools gamma_tools(double shape, double rate);

}  // namespace pssmp
