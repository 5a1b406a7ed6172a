#include "pssmp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pssmp/special.hpp"

namespace pssmp {

WeightedSample::WeightedSample(std::vector<double> pts, std::vector<double> wts)
    : points(std::move(pts)), weights(std::move(wts)) {
    if (points.size() != weights.size())
        throw std::invalid_argument("WeightedSample: points/weights length mismatch");
    if (points.empty()) throw std::invalid_argument("WeightedSample: empty sample");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w))
            throw std::invalid_argument("WeightedSample: weights must be finite and nonnegative");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("WeightedSample: zero total weight");
    for (double& w : weights) w /= total;
}

double WeightedSample::effective_size() const {
    double sq = 0.0;
    for (double w : weights) sq += w * w;
    return 1.0 / sq;
}

namespace {

GoodnessOfFit ks_from_sorted(const std::vector<std::pair<double, double>>& pw, const Cdf& cdf,
                             double n_eff) {
    double d = 0.0;
    double cum = 0.0;
    for (const auto& [x, w] : pw) {
        const double f = cdf(x);
        if (f < -1e-12 || f > 1.0 + 1e-12)
            throw std::invalid_argument("ks_test: cdf must map into [0,1]");
        d = std::max(d, std::fabs(cum - f));
        cum += w;
        d = std::max(d, std::fabs(cum - f));
    }
    return GoodnessOfFit{d, kolmogorov_tail(std::sqrt(n_eff) * d), n_eff};
}

}  // namespace

GoodnessOfFit ks_test(std::vector<double> sample, const Cdf& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_test: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    const double wn = 1.0 / n;
    std::vector<std::pair<double, double>> pw;
    pw.reserve(sample.size());
    for (double x : sample) pw.emplace_back(x, wn);
    return ks_from_sorted(pw, cdf, n);
}

GoodnessOfFit ks_test(const WeightedSample& sample, const Cdf& cdf) {
    if (sample.points.empty()) throw std::invalid_argument("ks_test: empty sample");
    std::vector<std::pair<double, double>> pw;
    pw.reserve(sample.points.size());
    for (std::size_t i = 0; i < sample.points.size(); ++i)
        pw.emplace_back(sample.points[i], sample.weights[i]);
    std::sort(pw.begin(), pw.end());
    return ks_from_sorted(pw, cdf, sample.effective_size());
}

GoodnessOfFit ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double n_eff = na * nb / (na + nb);
    return GoodnessOfFit{d, kolmogorov_tail(std::sqrt(n_eff) * d), n_eff};
}

MomentEstimate mc_moment(std::span<const double> samples, int k, MomentSign sign) {
    if (samples.size() < 2) throw std::invalid_argument("mc_moment: need at least two samples");
    if (k == 0) return MomentEstimate{1.0, 0.0};
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    std::vector<double> ys(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double x = samples[i];
        if (sign == MomentSign::Inverse) {
            if (!(x > 0.0))
                throw std::domain_error("mc_moment: inverse mode requires positive samples");
            x = 1.0 / x;
        }
        ys[i] = std::pow(x, k);
        mean += ys[i];
    }
    mean /= n;
    // jackknife of the sample mean: leave-one-out means theta_i = (n*mean - y_i)/(n-1)
    double ss = 0.0;
    for (double y : ys) {
        const double theta = (n * mean - y) / (n - 1.0);
        ss += (theta - mean) * (theta - mean);
    }
    const double se = std::sqrt((n - 1.0) / n * ss);
    return MomentEstimate{mean, se};
}

MomentEstimate weighted_mean(const WeightedSample& sample) {
    double mu = 0.0;
    for (std::size_t i = 0; i < sample.points.size(); ++i)
        mu += sample.weights[i] * sample.points[i];
    double var = 0.0;
    for (std::size_t i = 0; i < sample.points.size(); ++i) {
        const double d = sample.points[i] - mu;
        var += sample.weights[i] * d * d;
    }
    return MomentEstimate{mu, std::sqrt(var / sample.effective_size())};
}

TailFit fit_tail_exponent(std::span<const double> ts, std::span<const double> probs,
                          TailTransform transform) {
    if (ts.size() != probs.size() || ts.size() < 2)
        throw std::invalid_argument("fit_tail_exponent: need matched arrays, length >= 2");
    std::vector<double> xs(ts.size()), ys(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0)) throw std::domain_error("fit_tail_exponent: ts must be positive");
        if (i > 0 && ts[i] <= ts[i - 1])
            throw std::domain_error("fit_tail_exponent: ts must be sorted increasing");
        if (!(probs[i] > 0.0 && probs[i] < 1.0))
            throw std::domain_error("fit_tail_exponent: probs must lie in (0,1)");
        if (transform == TailTransform::LogLogQuadratic) {
            const double l = std::log(1.0 / ts[i]);
            xs[i] = l * l;
            ys[i] = -std::log(probs[i]);
        } else {
            xs[i] = std::log(ts[i]);
            ys[i] = std::log(probs[i]);
        }
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    if (std::fabs(det) < 1e-12 * std::max(1.0, n * sxx))
        throw std::domain_error("fit_tail_exponent: degenerate design matrix");
    const double slope = (n * sxy - sx * sy) / det;
    const double inter = (sy - slope * sx) / n;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - inter - slope * xs[i];
        rss += r * r;
    }
    return TailFit{slope, inter, std::sqrt(rss / n)};
}

double GammaTools::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    return regularized_lower_gamma(shape, rate * x);
}

double GammaTools::sample(Rng& rng) const {
    const double a = shape < 1.0 ? shape + 1.0 : shape;
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    double g;
    for (;;) {
        double x, v;
        do {
            x = nd(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = ud(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) {
            g = d * v;
            break;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            g = d * v;
            break;
        }
    }
    if (shape < 1.0) {
        double u;
        do {
            u = ud(rng);
        } while (u == 0.0);
        g *= std::pow(u, 1.0 / shape);
    }
    return g / rate;
}

GammaTools gamma_tools(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0))
        throw std::domain_error("gamma_tools: shape and rate must be positive");
    return GammaTools{shape, rate};
}

}  // namespace pssmp
