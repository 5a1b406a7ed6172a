#include "pssmp/levy_models.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pssmp/numerics.hpp"

namespace pssmp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Jump density of the Lamperti-stable subordinator.
double lamperti_jump_density(double beta, double x) {
    // beta e^x / (Gamma(1-beta) (e^x - 1)^{1+beta})
    const double em1 = std::expm1(x);
    return beta * std::exp(x) / (std::tgamma(1.0 - beta) * std::pow(em1, 1.0 + beta));
}

// int_0^eps x^p Pi(dx) with the x^{-1-beta} singularity handled by splitting
// off the leading small-x term analytically below delta.
double lamperti_truncated_moment(double beta, double p, double eps) {
    const double c0 = beta / std::tgamma(1.0 - beta);
    const double delta = std::min(1e-8, 0.1 * eps);
    // x^p Pi(x) ~ c0 x^{p-1-beta} near zero
    double head = c0 * std::pow(delta, p - beta) / (p - beta);
    double body = 0.0;
    if (eps > delta) {
        body = adaptive_simpson(
            [beta, p](double x) { return std::pow(x, p) * lamperti_jump_density(beta, x); },
            delta, eps, 1e-10);
    }
    return head + body;
}

double lamperti_mean(double beta) {
    // split at 1; tail decays like x e^{-beta x}
    const double head = lamperti_truncated_moment(beta, 1.0, 1.0);
    const double hi = std::max(50.0, 400.0 / beta);
    const double tail = adaptive_simpson(
        [beta](double x) { return x * lamperti_jump_density(beta, x); }, 1.0, hi, 1e-10);
    return head + tail;
}

struct LaplaceVisitor {
    double lambda;
    double operator()(const BrownianWithDrift& m) const {
        return 2.0 * lambda * lambda + 2.0 * m.a * lambda;
    }
    double operator()(const StablePlusDrift& m) const {
        return std::pow(lambda, m.beta) + m.c * lambda;
    }
    double operator()(const StandardPoisson&) const { return std::expm1(lambda); }
    double operator()(const CompoundPoissonExp& m) const {
        if (lambda >= m.b) return kInf;
        return m.a * lambda / (m.b - lambda);
    }
    double operator()(const LampertiStableSubordinator& m) const {
        if (lambda == 0.0) return 0.0;
        if (lambda >= m.beta - 1e-12) return kInf;  // e^{lambda x} Pi(dx) integrable iff lambda < beta
        const double beta = m.beta;
        const double c0 = beta / std::tgamma(1.0 - beta);
        const double delta = 1e-8;
        // (e^{lambda x} - 1) Pi(x) ~ c0 lambda x^{-beta} near zero
        const double head = c0 * lambda * std::pow(delta, 1.0 - beta) / (1.0 - beta);
        const double mid = adaptive_simpson(
            [beta, l = lambda](double x) {
                return std::expm1(l * x) * lamperti_jump_density(beta, x);
            },
            delta, 1.0, 1e-9);
        const double hi = std::min(1e6, std::max(60.0, 500.0 / (beta - lambda)));
        const double tail = adaptive_simpson(
            [beta, l = lambda](double x) {
                return std::expm1(l * x) * lamperti_jump_density(beta, x);
            },
            1.0, hi, 1e-9);
        return head + mid + tail;
    }
};

// Poisson count conditioned on being >= 1, by inversion. Used by the
// cell-skipping stepper for pure-jump models.
int poisson_at_least_one(double mu, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double denom = -std::expm1(-mu);
    double u = unif(rng) * denom;
    double p = mu * std::exp(-mu);
    int k = 1;
    while (u > p && k < 500) {
        u -= p;
        ++k;
        p *= mu / k;
    }
    return k;
}

}  // namespace

LevyModel make_brownian_with_drift(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("BrownianWithDrift: a must be positive");
    return BrownianWithDrift{a};
}

LevyModel make_stable_plus_drift(double beta, double c) {
    if (!(beta > 1.0 && beta < 2.0))
        throw std::invalid_argument("StablePlusDrift: beta must lie in (1,2)");
    if (!(c > 0.0)) throw std::invalid_argument("StablePlusDrift: c must be positive");
    return StablePlusDrift{beta, c};
}

LevyModel make_standard_poisson() { return StandardPoisson{}; }

LevyModel make_compound_poisson_exp(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("CompoundPoissonExp: rates must be positive");
    return CompoundPoissonExp{a, b};
}

LevyModel make_lamperti_stable(double beta, double neglected_var_tol) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("LampertiStableSubordinator: beta must lie in (0,1)");
    if (!(neglected_var_tol > 0.0))
        throw std::invalid_argument("LampertiStableSubordinator: tolerance must be positive");
    // pick eps so that int_0^eps x^2 Pi(dx) = neglected_var_tol; the small-x
    // form c0 eps^{2-beta}/(2-beta) seeds the bracket
    const double c0 = beta / std::tgamma(1.0 - beta);
    double eps = std::pow(neglected_var_tol * (2.0 - beta) / c0, 1.0 / (2.0 - beta));
    for (int i = 0; i < 60; ++i) {
        const double v = lamperti_truncated_moment(beta, 2.0, eps);
        const double r = v / neglected_var_tol;
        if (r > 0.999 && r < 1.001) break;
        eps *= std::pow(r, -1.0 / (2.0 - beta));
    }
    LampertiStableSubordinator m;
    m.beta = beta;
    m.cutoff = eps;
    m.small_jump_drift = lamperti_truncated_moment(beta, 1.0, eps);
    m.tail_mass = std::pow(std::expm1(eps), -beta) / std::tgamma(1.0 - beta);
    m.mean = lamperti_mean(beta);
    return m;
}

std::string model_name(const LevyModel& model) {
    struct V {
        std::string operator()(const BrownianWithDrift&) const { return "brownian_drift"; }
        std::string operator()(const StablePlusDrift&) const { return "stable_drift"; }
        std::string operator()(const StandardPoisson&) const { return "poisson"; }
        std::string operator()(const CompoundPoissonExp&) const { return "compound_poisson_exp"; }
        std::string operator()(const LampertiStableSubordinator&) const { return "lamperti_stable"; }
    };
    return std::visit(V{}, model);
}

double laplace_exponent(const LevyModel& model, double lambda) {
    if (lambda < 0.0) throw std::domain_error("laplace_exponent: lambda must be nonnegative");
    if (lambda == 0.0) return 0.0;
    return std::visit(LaplaceVisitor{lambda}, model);
}

double drift_mean(const LevyModel& model) {
    struct V {
        double operator()(const BrownianWithDrift& m) const { return 2.0 * m.a; }
        double operator()(const StablePlusDrift& m) const { return m.c; }
        double operator()(const StandardPoisson&) const { return 1.0; }
        double operator()(const CompoundPoissonExp& m) const { return m.a / m.b; }
        double operator()(const LampertiStableSubordinator& m) const { return m.mean; }
    };
    return std::visit(V{}, model);
}

double sample_spectrally_negative_stable(double beta, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::exponential_distribution<double> expd(1.0);
    double u;
    do {
        u = (unif(rng) - 0.5) * kPi;
    } while (std::fabs(std::cos(u)) < 1e-12);
    const double w = expd(rng) + 1e-300;
    const double tphi = std::tan(0.5 * kPi * beta);  // negative on (1,2)
    const double theta0 = std::atan(-tphi) / beta;
    const double scale = std::pow(1.0 + tphi * tphi, 0.5 / beta);
    const double arg = beta * (u + theta0);
    return scale * std::sin(arg) / std::pow(std::cos(u), 1.0 / beta) *
           std::pow(std::cos(u - arg) / w, (1.0 - beta) / beta);
}

double sample_increment(const LevyModel& model, double ds, Rng& rng) {
    if (!(ds > 0.0)) throw std::domain_error("sample_increment: ds must be positive");
    struct V {
        double ds;
        Rng& rng;
        double operator()(const BrownianWithDrift& m) const {
            std::normal_distribution<double> nd(2.0 * m.a * ds, 2.0 * std::sqrt(ds));
            return nd(rng);
        }
        double operator()(const StablePlusDrift& m) const {
            // scale so that E exp(lambda Y_ds) = exp(ds lambda^beta)
            const double sc = std::pow(-std::cos(0.5 * kPi * m.beta) * ds, 1.0 / m.beta);
            return sc * sample_spectrally_negative_stable(m.beta, rng) + m.c * ds;
        }
        double operator()(const StandardPoisson&) const {
            std::poisson_distribution<long> pd(ds);
            return static_cast<double>(pd(rng));
        }
        double operator()(const CompoundPoissonExp& m) const {
            std::poisson_distribution<long> pd(m.a * ds);
            std::exponential_distribution<double> ed(m.b);
            const long n = pd(rng);
            double sum = 0.0;
            for (long i = 0; i < n; ++i) sum += ed(rng);
            return sum;
        }
        double operator()(const LampertiStableSubordinator& m) const {
            std::poisson_distribution<long> pd(m.tail_mass * ds);
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            const long n = pd(rng);
            double sum = m.small_jump_drift * ds;
            const double base = std::expm1(m.cutoff);
            for (long i = 0; i < n; ++i) {
                double v;
                do {
                    v = unif(rng);
                } while (v == 0.0);
                // inverse of the normalized tail ((e^y-1)/(e^eps-1))^{-beta}
                sum += std::log1p(base * std::pow(v, -1.0 / m.beta));
            }
            return sum;
        }
    };
    return std::visit(V{ds, rng}, model);
}

LevyPath simulate_path(const LevyModel& model, double ds, double s_max, PathSign sign,
                       std::uint64_t seed, const SimulateOptions& opts) {
    if (!(ds > 0.0) || !(s_max > 0.0))
        throw std::domain_error("simulate_path: ds and s_max must be positive");
    if (ds > s_max) throw std::domain_error("simulate_path: require ds <= s_max");
    const auto steps = static_cast<std::size_t>(std::llround(std::floor(s_max / ds + 1e-9)));
    if (steps + 1 > opts.max_grid_points)
        throw std::length_error("simulate_path: grid length exceeds configured cap");
    LevyPath path;
    path.model = model;
    path.sign = sign;
    path.grid.resize(steps + 1);
    path.values.resize(steps + 1);
    Rng rng = make_rng(seed);
    const double flip = sign == PathSign::Dual ? -1.0 : 1.0;
    path.grid[0] = 0.0;
    path.values[0] = 0.0;
    double value = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        value += flip * sample_increment(model, ds, rng);
        path.grid[k] = static_cast<double>(k) * ds;
        path.values[k] = value;
    }
    return path;
}

ConditionHReport check_condition_h(const LevyModel& model) {
    const double m = drift_mean(model);
    ConditionHReport rep;
    rep.mean_finite = std::isfinite(m);
    rep.mean_positive = m > 0.0;
    rep.arithmetic_flag = std::holds_alternative<StandardPoisson>(model);
    return rep;
}

std::string model_config(const LevyModel& model) {
    std::ostringstream out;
    out.precision(17);
    out << "model = " << model_name(model) << "\n";
    struct V {
        std::ostringstream& out;
        void operator()(const BrownianWithDrift& m) const { out << "a = " << m.a << "\n"; }
        void operator()(const StablePlusDrift& m) const {
            out << "beta = " << m.beta << "\n"
                << "c = " << m.c << "\n";
        }
        void operator()(const StandardPoisson&) const {}
        void operator()(const CompoundPoissonExp& m) const {
            out << "a = " << m.a << "\n"
                << "b = " << m.b << "\n";
        }
        void operator()(const LampertiStableSubordinator& m) const {
            out << "beta = " << m.beta << "\n";
        }
    };
    std::visit(V{out}, model);
    return out.str();
}

LevyModel parse_model_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("model config: expected key = value, got '" + t + "'");
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    const auto it = kv.find("model");
    if (it == kv.end()) throw std::invalid_argument("model config: missing 'model' key");
    const std::string name = it->second;
    kv.erase(it);
    auto take = [&kv](const std::string& key) {
        const auto f = kv.find(key);
        if (f == kv.end()) throw std::invalid_argument("model config: missing key '" + key + "'");
        const double v = std::stod(f->second);
        kv.erase(f);
        return v;
    };
    LevyModel model = [&]() -> LevyModel {
        if (name == "brownian_drift") return make_brownian_with_drift(take("a"));
        if (name == "stable_drift") return make_stable_plus_drift(take("beta"), take("c"));
        if (name == "poisson") return make_standard_poisson();
        if (name == "compound_poisson_exp") return make_compound_poisson_exp(take("a"), take("b"));
        if (name == "lamperti_stable") return make_lamperti_stable(take("beta"));
        throw std::invalid_argument("model config: unknown model '" + name + "'");
    }();
    if (!kv.empty())
        throw std::invalid_argument("model config: unknown key '" + kv.begin()->first + "'");
    return model;
}

// --- internal helpers shared with the lamperti layer ---

namespace detail {

bool is_pure_jump(const LevyModel& model) {
    return std::holds_alternative<StandardPoisson>(model) ||
           std::holds_alternative<CompoundPoissonExp>(model);
}

double jump_rate(const LevyModel& model) {
    if (std::holds_alternative<StandardPoisson>(model)) return 1.0;
    return std::get<CompoundPoissonExp>(model).a;
}

double sample_jump_in_cell(const LevyModel& model, double mu, Rng& rng) {
    const int n = poisson_at_least_one(mu, rng);
    if (std::holds_alternative<StandardPoisson>(model)) return static_cast<double>(n);
    std::exponential_distribution<double> ed(std::get<CompoundPoissonExp>(model).b);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += ed(rng);
    return sum;
}

}  // namespace detail

}  // namespace pssmp
