#include "pssmp/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pssmp/numerics.hpp"

namespace pssmp {

namespace {

constexpr double kGammaTol = 1e-14;
constexpr int kMaxIter = 500;

// Lower regularized gamma by power series, valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kGammaTol) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma by modified Lentz continued fraction, x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kGammaTol;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kGammaTol) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_lower_gamma(double a, double x) {
    if (a <= 0.0) throw std::domain_error("regularized_lower_gamma: shape must be positive");
    if (x < 0.0) throw std::domain_error("regularized_lower_gamma: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double regularized_upper_gamma(double a, double x) {
    if (a <= 0.0) throw std::domain_error("regularized_upper_gamma: shape must be positive");
    if (x < 0.0) throw std::domain_error("regularized_upper_gamma: x must be nonnegative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double log_upper_gamma_integral(double a, double x) {
    if (x < a + 1.0) {
        const double q = regularized_upper_gamma(a, x);
        return std::log(q) + std::lgamma(a);
    }
    // log of the continued-fraction prefactor form, stays finite far in the tail
    const double tiny = std::numeric_limits<double>::min() / kGammaTol;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kGammaTol) break;
    }
    return std::log(h) - x + a * std::log(x);
}

double kolmogorov_tail(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.2) return 1.0;  // below any practical resolution
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-14) break;
        sign = -sign;
    }
    const double q = 2.0 * sum;
    return q < 0.0 ? 0.0 : (q > 1.0 ? 1.0 : q);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
    struct Rec {
        const std::function<double(double)>& f;
        double rel_tol;
        double run(double a, double b, double fa, double fm, double fb, double whole,
                   int depth) const {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m);
            const double rm = 0.5 * (m + b);
            const double flm = f(lm);
            const double frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            const double scale = std::fabs(left + right) + 1e-300;
            if (depth <= 0 || std::fabs(delta) <= 15.0 * rel_tol * scale) {
                return left + right + delta / 15.0;
            }
            return run(a, m, fa, flm, fm, left, depth - 1) +
                   run(m, b, fm, frm, fb, right, depth - 1);
        }
    };
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw std::invalid_argument("adaptive_simpson: bad interval");
    }
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Rec{f, rel_tol}.run(a, b, fa, fm, fb, whole, max_depth);
}

double inverse_of_increasing(const std::function<double(double)>& g, double target,
                             double lo_hint, double rel_tol, int max_iter) {
    double lo = lo_hint;
    double hi = std::max(1.0, 2.0 * lo);
    int guard = 0;
    while (!(g(hi) > target)) {
        hi *= 2.0;
        if (++guard > 1200 || !std::isfinite(hi)) {
            throw std::runtime_error("inverse_of_increasing: failed to bracket target");
        }
    }
    // shrink lo into the bracket if the hint already exceeds the target
    while (lo > 0.0 && g(lo) > target) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 2400) throw std::runtime_error("inverse_of_increasing: bracket failure");
        if (lo < 1e-300) {
            lo = 0.0;
            break;
        }
    }
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > target) {
            hi = mid;
        } else {
            lo = mid;
        }
        if (hi - lo <= rel_tol * std::max(1e-300, hi)) break;
    }
    return hi;
}

}  // namespace pssmp
