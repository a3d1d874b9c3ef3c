#pragma once

#include <memory>
#include <span>
#include <string>

#include "charfit/quadrature.hpp"

namespace charfit {

double norm_pdf(double x);
double norm_cdf(double x);
double norm_quantile(double p);

struct Support {
    double lo;
    double hi;
};

/// A continuous law with enough structure for quadrature and inversion
/// sampling. survival() is separate from cdf() so tails keep full precision.
class Distribution {
public:
    virtual ~Distribution() = default;

    virtual double pdf(double x) const = 0;
    virtual double cdf(double x) const = 0;
    virtual double survival(double x) const { return 1.0 - cdf(x); }
    virtual double quantile(double p) const = 0;
    virtual Support support() const = 0;
};

/// E[g(X)] under d, dispatching on the support to the right transform.
double expect(const Distribution& d, const Integrand& g,
              const QuadratureOptions& opts = {},
              std::span<const double> breakpoints = {});

class Exponential final : public Distribution {
public:
    explicit Exponential(double rate = 1.0);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double survival(double x) const override;
    double quantile(double p) const override;
    Support support() const override { return {0.0, std::numeric_limits<double>::infinity()}; }

private:
    double rate_;
};

/// Centered normal with free scale (the composite normality null).
class Normal final : public Distribution {
public:
    explicit Normal(double sigma = 1.0, double mu = 0.0);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double survival(double x) const override;
    double quantile(double p) const override;
    Support support() const override;

private:
    double sigma_, mu_;
};

/// F(x) = x^mu on [0, 1].
class PowerLaw final : public Distribution {
public:
    explicit PowerLaw(double mu = 1.0);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    Support support() const override { return {0.0, 1.0}; }

private:
    double mu_;
};

class Cauchy final : public Distribution {
public:
    explicit Cauchy(double scale = 1.0, double location = 0.0);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double survival(double x) const override;
    double quantile(double p) const override;
    Support support() const override;

private:
    double scale_, location_;
};

/// Weibull-type alternative: F(x, theta) = 1 - exp(-x^(1+theta)).
class WeibullAlternative final : public Distribution {
public:
    explicit WeibullAlternative(double theta);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double survival(double x) const override;
    double quantile(double p) const override;
    Support support() const override { return {0.0, std::numeric_limits<double>::infinity()}; }

private:
    double theta_;
};

/// Makeham alternative: density (1 + theta(1 - e^-x)) exp(-x - theta(e^-x - 1 + x)).
class MakehamAlternative final : public Distribution {
public:
    explicit MakehamAlternative(double theta);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double survival(double x) const override;
    double quantile(double p) const override;
    Support support() const override { return {0.0, std::numeric_limits<double>::infinity()}; }

private:
    double theta_;
};

/// Linear failure rate alternative: density (1 + theta x) exp(-x - theta x^2 / 2).
class LfrAlternative final : public Distribution {
public:
    explicit LfrAlternative(double theta);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double survival(double x) const override;
    double quantile(double p) const override;
    Support support() const override { return {0.0, std::numeric_limits<double>::infinity()}; }

private:
    double theta_;
};

/// Azzalini skew-normal: density 2 phi(x) Phi(theta x).
class SkewNormal final : public Distribution {
public:
    explicit SkewNormal(double theta);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    Support support() const override;

private:
    double theta_;
};

/// The named null families used by tests and characterizations.
/// Accepts "exponential", "normal", "power-law", "cauchy", "symmetric"
/// (the last one is sampled as a standard normal; every implemented
/// symmetry statistic is distribution-free over continuous symmetric laws).
std::unique_ptr<Distribution> make_null_distribution(const std::string& family);

}  // namespace charfit
