#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "charfit/distributions.hpp"
#include "charfit/quadrature.hpp"

namespace charfit {

/// One step of a U-empirical df: `weight` subsets (or ordered arrangements)
/// produced the value `location`.
struct WeightedJump {
    double location;
    double weight;
};

/// A sub-sample statistic g(X_1, ..., X_r) together with the distributional
/// structure the efficiency machinery needs: the cdf of g under an arbitrary
/// law and the conditional cdf given one fixed argument.
///
/// Order-dependent statistics (orderings() > 1) are symmetrized by averaging
/// the indicator over argument orderings; subset_values() then reports one
/// value per ordering, each carrying weight 1/orderings() in the U-empirical
/// df.
class SubsetStatistic {
public:
    SubsetStatistic(std::string name, int degree) : name_(std::move(name)), degree_(degree) {}
    virtual ~SubsetStatistic() = default;

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    virtual int orderings() const { return 1; }

    /// Values of g on one subset, one per ordering. The subset is sorted
    /// internally first, so the output never depends on the argument order.
    virtual void subset_values(std::span<const double> subset, std::span<double> out) const = 0;

    /// g with the arguments taken in the order given (used when drawing
    /// independent realizations of g).
    virtual double evaluate_ordered(std::span<const double> args) const = 0;

    /// P(g(X_1..X_r) < t), X_i iid with law d.
    virtual double cdf(const Distribution& d, double t,
                       const QuadratureOptions& opts = {}) const = 0;

    /// P(g(x, X_2..X_r) < t) with one argument pinned at x; for
    /// order-dependent g the pinned slot is averaged over positions.
    virtual double cond_cdf(const Distribution& d, double x, double t,
                            const QuadratureOptions& opts = {}) const = 0;

    /// Kinks of t -> cond_cdf(d, x, t); quadratures over t split there.
    virtual void cond_breakpoints(double x, std::vector<double>& out) const { (void)x; (void)out; }
    /// Kinks of x -> cond_cdf(d, x, t); quadratures over x split there.
    virtual void cdf_breakpoints(double t, std::vector<double>& out) const { (void)t; (void)out; }

    /// Direct construction of the U-empirical jump multiset from the sorted
    /// sample, where counting beats enumeration. Weights sum to
    /// C(n, r) * orderings(). Returns false when only enumeration applies.
    virtual bool weighted_jumps(std::span<const double> sorted,
                                std::vector<WeightedJump>& out) const {
        (void)sorted;
        (void)out;
        return false;
    }

private:
    std::string name_;
    int degree_;
};

using StatPtr = std::shared_ptr<const SubsetStatistic>;

// Factories for every statistic used by the registered characterizations.
StatPtr make_identity();
StatPtr make_scaled_identity(double factor, std::string name);   // factor * X
StatPtr make_scaled_min_pair(double factor, std::string name);   // factor * min(X, Y)
StatPtr make_spacing_med_min3();                                 // X_{2,3} - X_{1,3}
StatPtr make_abs_diff_pair();                                    // |X - Y|
StatPtr make_max_of_k(int k);                                    // max(X_1..X_k)
StatPtr make_harmonic_sum(int k);                                // sum X_i / i, symmetrized
StatPtr make_linear_pair(double a, double b, std::string name);  // aX + bY, symmetrized
StatPtr make_shepp_pair();                                       // 2XY / sqrt(X^2 + Y^2)
StatPtr make_ratio_min_pair();                                   // min(X/Y, Y/X)
StatPtr make_abs_value();                                        // |X|
StatPtr make_abs_max_pair();                                     // |max(X, Y)|
StatPtr make_abs_extreme_of_k(int k, bool minimum);              // |X_{1,k}| or |X_{k,k}|

/// C(n, k) as a double; exact while the result stays under 2^53.
double binom(std::size_t n, std::size_t k);

}  // namespace charfit
