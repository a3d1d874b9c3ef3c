#include "charfit/distributions.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/owens_t.hpp>

#include "charfit/errors.hpp"

namespace charfit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kSqrt2 = 1.4142135623730950488;

void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + ": p outside [0,1]");
}
}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double norm_quantile(double p) {
    check_prob(p, "norm_quantile");
    return -kSqrt2 * boost::math::erfc_inv(2.0 * p);
}

double expect(const Distribution& d, const Integrand& g,
              const QuadratureOptions& opts, std::span<const double> breakpoints) {
    const Support s = d.support();
    auto integrand = [&](double x) {
        const double fx = d.pdf(x);
        return fx == 0.0 ? 0.0 : fx * g(x);
    };
    if (std::isinf(s.lo) && std::isinf(s.hi)) {
        return integrate_real_line(integrand, opts, breakpoints);
    }
    if (std::isinf(s.hi)) {
        return integrate_semi_infinite(integrand, s.lo, opts, breakpoints);
    }
    return integrate(integrand, s.lo, s.hi, opts, breakpoints);
}

// ---------------------------------------------------------------- Exponential

Exponential::Exponential(double rate) : rate_(rate) {
    if (!(rate > 0.0)) throw DomainError("Exponential: rate must be positive");
}
double Exponential::pdf(double x) const { return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x); }
double Exponential::cdf(double x) const { return x <= 0.0 ? 0.0 : -std::expm1(-rate_ * x); }
double Exponential::survival(double x) const { return x <= 0.0 ? 1.0 : std::exp(-rate_ * x); }
double Exponential::quantile(double p) const {
    check_prob(p, "Exponential::quantile");
    return -std::log1p(-p) / rate_;
}

// --------------------------------------------------------------------- Normal

Normal::Normal(double sigma, double mu) : sigma_(sigma), mu_(mu) {
    if (!(sigma > 0.0)) throw DomainError("Normal: sigma must be positive");
}
double Normal::pdf(double x) const { return norm_pdf((x - mu_) / sigma_) / sigma_; }
double Normal::cdf(double x) const { return norm_cdf((x - mu_) / sigma_); }
double Normal::survival(double x) const { return norm_cdf(-(x - mu_) / sigma_); }
double Normal::quantile(double p) const { return mu_ + sigma_ * norm_quantile(p); }
Support Normal::support() const { return {-kInf, kInf}; }

// ------------------------------------------------------------------- PowerLaw

PowerLaw::PowerLaw(double mu) : mu_(mu) {
    if (!(mu > 0.0)) throw DomainError("PowerLaw: mu must be positive");
}
double PowerLaw::pdf(double x) const {
    if (x <= 0.0 || x > 1.0) return 0.0;
    return mu_ * std::pow(x, mu_ - 1.0);
}
double PowerLaw::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return std::pow(x, mu_);
}
double PowerLaw::quantile(double p) const {
    check_prob(p, "PowerLaw::quantile");
    return std::pow(p, 1.0 / mu_);
}

// --------------------------------------------------------------------- Cauchy

Cauchy::Cauchy(double scale, double location) : scale_(scale), location_(location) {
    if (!(scale > 0.0)) throw DomainError("Cauchy: scale must be positive");
}
double Cauchy::pdf(double x) const {
    const double z = (x - location_) / scale_;
    return 1.0 / (M_PI * scale_ * (1.0 + z * z));
}
double Cauchy::cdf(double x) const {
    return 0.5 + std::atan((x - location_) / scale_) / M_PI;
}
double Cauchy::survival(double x) const {
    return 0.5 - std::atan((x - location_) / scale_) / M_PI;
}
double Cauchy::quantile(double p) const {
    check_prob(p, "Cauchy::quantile");
    return location_ + scale_ * std::tan(M_PI * (p - 0.5));
}
Support Cauchy::support() const { return {-kInf, kInf}; }

// ---------------------------------------------------------------- alternatives

WeibullAlternative::WeibullAlternative(double theta) : theta_(theta) {
    if (!(theta >= 0.0)) throw DomainError("WeibullAlternative: theta must be >= 0");
}
double WeibullAlternative::pdf(double x) const {
    if (x <= 0.0) return theta_ == 0.0 && x == 0.0 ? 1.0 : 0.0;
    const double a = 1.0 + theta_;
    return a * std::pow(x, theta_) * std::exp(-std::pow(x, a));
}
double WeibullAlternative::cdf(double x) const {
    return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x, 1.0 + theta_));
}
double WeibullAlternative::survival(double x) const {
    return x <= 0.0 ? 1.0 : std::exp(-std::pow(x, 1.0 + theta_));
}
double WeibullAlternative::quantile(double p) const {
    check_prob(p, "WeibullAlternative::quantile");
    return std::pow(-std::log1p(-p), 1.0 / (1.0 + theta_));
}

MakehamAlternative::MakehamAlternative(double theta) : theta_(theta) {
    if (!(theta >= 0.0)) throw DomainError("MakehamAlternative: theta must be >= 0");
}
double MakehamAlternative::pdf(double x) const {
    if (x < 0.0) return 0.0;
    const double emx = std::exp(-x);
    return (1.0 + theta_ * (1.0 - emx)) * std::exp(-x - theta_ * (emx - 1.0 + x));
}
double MakehamAlternative::cdf(double x) const { return x <= 0.0 ? 0.0 : 1.0 - survival(x); }
double MakehamAlternative::survival(double x) const {
    if (x <= 0.0) return 1.0;
    return std::exp(-x - theta_ * (std::exp(-x) - 1.0 + x));
}
double MakehamAlternative::quantile(double p) const {
    check_prob(p, "MakehamAlternative::quantile");
    if (p == 0.0) return 0.0;
    if (p == 1.0) return kInf;
    const double target = -std::log1p(-p);
    // Solve x + theta(e^-x - 1 + x) = target; the left side is increasing.
    double lo = 0.0, hi = target;  // theta >= 0 makes the hazard >= 1
    double x = target / (1.0 + theta_);
    for (int it = 0; it < 80; ++it) {
        const double emx = std::exp(-x);
        const double g = x + theta_ * (emx - 1.0 + x) - target;
        if (g > 0.0) hi = x; else lo = x;
        const double dg = 1.0 + theta_ * (1.0 - emx);
        double step = g / dg;
        double next = x - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(x))) return next;
        x = next;
    }
    return x;
}

LfrAlternative::LfrAlternative(double theta) : theta_(theta) {
    if (!(theta >= 0.0)) throw DomainError("LfrAlternative: theta must be >= 0");
}
double LfrAlternative::pdf(double x) const {
    if (x < 0.0) return 0.0;
    return (1.0 + theta_ * x) * std::exp(-x - 0.5 * theta_ * x * x);
}
double LfrAlternative::cdf(double x) const { return x <= 0.0 ? 0.0 : 1.0 - survival(x); }
double LfrAlternative::survival(double x) const {
    if (x <= 0.0) return 1.0;
    return std::exp(-x - 0.5 * theta_ * x * x);
}
double LfrAlternative::quantile(double p) const {
    check_prob(p, "LfrAlternative::quantile");
    const double e = -std::log1p(-p);
    if (theta_ == 0.0) return e;
    // positive root of theta x^2 / 2 + x - e = 0
    return (-1.0 + std::sqrt(1.0 + 2.0 * theta_ * e)) / theta_;
}

SkewNormal::SkewNormal(double theta) : theta_(theta) {}
double SkewNormal::pdf(double x) const { return 2.0 * norm_pdf(x) * norm_cdf(theta_ * x); }
double SkewNormal::cdf(double x) const {
    return norm_cdf(x) - 2.0 * boost::math::owens_t(x, theta_);
}
double SkewNormal::quantile(double p) const {
    check_prob(p, "SkewNormal::quantile");
    double lo = -40.0, hi = 40.0, x = norm_quantile(p);
    for (int it = 0; it < 200; ++it) {
        const double g = cdf(x) - p;
        if (g > 0.0) hi = x; else lo = x;
        const double d = pdf(x);
        double next = d > 0.0 ? x - g / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-14 * (1.0 + std::abs(x))) return next;
        x = next;
    }
    return x;
}
Support SkewNormal::support() const { return {-kInf, kInf}; }

std::unique_ptr<Distribution> make_null_distribution(const std::string& family) {
    if (family == "exponential") return std::make_unique<Exponential>();
    if (family == "normal") return std::make_unique<Normal>();
    if (family == "power-law") return std::make_unique<PowerLaw>();
    if (family == "cauchy") return std::make_unique<Cauchy>();
    if (family == "symmetric") return std::make_unique<Normal>();
    throw DomainError("unknown null family: " + family);
}

}  // namespace charfit
