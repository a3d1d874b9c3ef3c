#include "charfit/subset_stat.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "charfit/errors.hpp"

namespace charfit {
namespace {

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

std::array<double, 3> sorted3(std::span<const double> s) {
    std::array<double, 3> a{s[0], s[1], s[2]};
    std::sort(a.begin(), a.end());
    return a;
}

// P(c * Y < u) for a constant c != 0.
double scaled_cdf(const Distribution& d, double c, double u) {
    return c > 0.0 ? d.cdf(u / c) : d.survival(u / c);
}

class IdentityStat final : public SubsetStatistic {
public:
    IdentityStat() : SubsetStatistic("identity", 1) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = s[0];
    }
    double evaluate_ordered(std::span<const double> a) const override { return a[0]; }
    double cdf(const Distribution& d, double t, const QuadratureOptions&) const override {
        return d.cdf(t);
    }
    double cond_cdf(const Distribution&, double x, double t,
                    const QuadratureOptions&) const override {
        return x < t ? 1.0 : 0.0;
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override { out.push_back(x); }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        for (double v : sorted) out.push_back({v, 1.0});
        return true;
    }
};

class ScaledIdentityStat final : public SubsetStatistic {
public:
    ScaledIdentityStat(double c, std::string name)
        : SubsetStatistic(std::move(name), 1), c_(c) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = c_ * s[0];
    }
    double evaluate_ordered(std::span<const double> a) const override { return c_ * a[0]; }
    double cdf(const Distribution& d, double t, const QuadratureOptions&) const override {
        return d.cdf(t / c_);
    }
    double cond_cdf(const Distribution&, double x, double t,
                    const QuadratureOptions&) const override {
        return c_ * x < t ? 1.0 : 0.0;
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(c_ * x);
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        for (double v : sorted) out.push_back({c_ * v, 1.0});
        return true;
    }

private:
    double c_;
};

class ScaledMinPair final : public SubsetStatistic {
public:
    ScaledMinPair(double c, std::string name) : SubsetStatistic(std::move(name), 2), c_(c) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = c_ * std::min(s[0], s[1]);
    }
    double evaluate_ordered(std::span<const double> a) const override {
        return c_ * std::min(a[0], a[1]);
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions&) const override {
        const double s = d.survival(t / c_);
        return clamp01(1.0 - s * s);
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        return c_ * x < t ? 1.0 : d.cdf(t / c_);
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(c_ * x);
    }
    void cdf_breakpoints(double t, std::vector<double>& out) const override {
        out.push_back(t / c_);
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        const std::size_t n = sorted.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            out.push_back({c_ * sorted[i], static_cast<double>(n - 1 - i)});
        }
        return true;
    }

private:
    double c_;
};

class SpacingMedMin3 final : public SubsetStatistic {
public:
    SpacingMedMin3() : SubsetStatistic("spacing-2-3", 3) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        const auto a = sorted3(s);
        out[0] = a[1] - a[0];
    }
    double evaluate_ordered(std::span<const double> s) const override {
        const auto a = sorted3(s);
        return a[1] - a[0];
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions& opts) const override {
        if (t <= 0.0) return 0.0;
        auto g = [&](double u) {
            const double su = d.survival(u);
            const double sut = d.survival(u + t);
            return su * su - sut * sut;
        };
        return clamp01(3.0 * expect(d, g, opts));
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions& opts) const override {
        if (t <= 0.0) return 0.0;
        const double sx = d.survival(x);
        const double sxt = d.survival(x + t);
        // x is the minimum: both others >= x, smaller of them below x + t.
        double p = sx * sx - sxt * sxt;
        // x is the median: one below within t, one above.
        p += 2.0 * sx * (d.cdf(x) - d.cdf(x - t));
        // x is the maximum: both below x, within t of each other.
        const double lo = d.support().lo;
        if (x > lo) {
            auto g = [&](double y) {
                return d.pdf(y) * (d.cdf(std::min(x, y + t)) - d.cdf(y));
            };
            const double cut = x - t;
            const std::array<double, 1> bp{cut};
            p += 2.0 * integrate(g, lo, x, opts,
                                 cut > lo ? std::span<const double>(bp)
                                          : std::span<const double>());
        }
        return clamp01(p);
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(x);
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        const std::size_t n = sorted.size();
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double w = static_cast<double>(n - 1 - j);
            for (std::size_t i = 0; i < j; ++i) {
                out.push_back({sorted[j] - sorted[i], w});
            }
        }
        return true;
    }
};

class AbsDiffPair final : public SubsetStatistic {
public:
    AbsDiffPair() : SubsetStatistic("abs-diff", 2) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = std::abs(s[0] - s[1]);
    }
    double evaluate_ordered(std::span<const double> a) const override {
        return std::abs(a[0] - a[1]);
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions& opts) const override {
        if (t <= 0.0) return 0.0;
        auto g = [&](double y) { return d.cdf(y + t) - d.cdf(y - t); };
        const double lo = d.support().lo;
        std::vector<double> bp;
        if (std::isfinite(lo)) bp.push_back(lo + t);
        return clamp01(expect(d, g, opts, bp));
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        if (t <= 0.0) return 0.0;
        return clamp01(d.cdf(x + t) - d.cdf(x - t));
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(x);  // where x - t crosses a support edge at zero
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        const std::size_t n = sorted.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                out.push_back({sorted[j] - sorted[i], 1.0});
            }
        }
        return true;
    }
};

class MaxOfK final : public SubsetStatistic {
public:
    explicit MaxOfK(int k) : SubsetStatistic("max-" + std::to_string(k), k), k_(k) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = *std::max_element(s.begin(), s.end());
    }
    double evaluate_ordered(std::span<const double> a) const override {
        return *std::max_element(a.begin(), a.end());
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions&) const override {
        return std::pow(d.cdf(t), k_);
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        return x < t ? std::pow(d.cdf(t), k_ - 1) : 0.0;
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(x);
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        const std::size_t n = sorted.size();
        for (std::size_t i = static_cast<std::size_t>(k_) - 1; i < n; ++i) {
            out.push_back({sorted[i], binom(i, k_ - 1)});
        }
        return true;
    }

private:
    int k_;
};

class HarmonicSumK final : public SubsetStatistic {
public:
    explicit HarmonicSumK(int k)
        : SubsetStatistic("harmonic-sum-" + std::to_string(k), k), k_(k) {
        if (k != 2 && k != 3) throw DomainError("harmonic-sum: k must be 2 or 3");
    }
    int orderings() const override { return k_ == 2 ? 2 : 6; }
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        if (k_ == 2) {
            std::array<double, 2> a{s[0], s[1]};
            std::sort(a.begin(), a.end());
            out[0] = a[0] + a[1] / 2.0;
            out[1] = a[1] + a[0] / 2.0;
            return;
        }
        const auto a = sorted3(s);
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int p = 0; p < 6; ++p) {
            out[p] = a[perms[p][0]] + a[perms[p][1]] / 2.0 + a[perms[p][2]] / 3.0;
        }
    }
    double evaluate_ordered(std::span<const double> a) const override {
        double v = 0.0;
        for (int i = 0; i < k_; ++i) v += a[i] / (i + 1.0);
        return v;
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions& opts) const override {
        if (t <= 0.0) return 0.0;
        if (k_ == 2) {
            auto g = [&](double u) { return d.cdf(2.0 * (t - u)); };
            const std::array<double, 1> bp{t};
            return clamp01(expect(d, g, opts, bp));
        }
        auto outer = [&](double u) { return partial_sum23(d, t - u, opts); };
        const std::array<double, 1> bp{t};
        return clamp01(expect(d, outer, opts, bp));
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions& opts) const override {
        if (t <= x / k_) return 0.0;  // even the smallest coefficient placement fails
        if (k_ == 2) {
            return clamp01(0.5 * (d.cdf(2.0 * (t - x)) + d.cdf(t - 0.5 * x)));
        }
        const double p1 = partial_sum23(d, t - x, opts);
        const double p2 = partial_sum13(d, t - 0.5 * x, opts);
        const double p3 = partial_sum12(d, t - x / 3.0, opts);
        return clamp01((p1 + p2 + p3) / 3.0);
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(x);
        out.push_back(x / 2.0);
        if (k_ == 3) out.push_back(x / 3.0);
    }

private:
    // P(Y/2 + Z/3 < tau), P(Y + Z/3 < tau), P(Y + Z/2 < tau)
    double partial_sum23(const Distribution& d, double tau, const QuadratureOptions& opts) const {
        if (tau <= 0.0) return 0.0;
        auto g = [&](double y) { return d.cdf(3.0 * (tau - 0.5 * y)); };
        const std::array<double, 1> bp{2.0 * tau};
        return clamp01(expect(d, g, opts, bp));
    }
    double partial_sum13(const Distribution& d, double tau, const QuadratureOptions& opts) const {
        if (tau <= 0.0) return 0.0;
        auto g = [&](double y) { return d.cdf(3.0 * (tau - y)); };
        const std::array<double, 1> bp{tau};
        return clamp01(expect(d, g, opts, bp));
    }
    double partial_sum12(const Distribution& d, double tau, const QuadratureOptions& opts) const {
        if (tau <= 0.0) return 0.0;
        auto g = [&](double y) { return d.cdf(2.0 * (tau - y)); };
        const std::array<double, 1> bp{tau};
        return clamp01(expect(d, g, opts, bp));
    }

    int k_;
};

class LinearPairStat final : public SubsetStatistic {
public:
    LinearPairStat(double a, double b, std::string name)
        : SubsetStatistic(std::move(name), 2), a_(a), b_(b) {
        if (a_ == 0.0 || b_ == 0.0) throw DomainError("linear pair: zero coefficient");
    }
    int orderings() const override { return a_ == b_ ? 1 : 2; }
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        std::array<double, 2> v{s[0], s[1]};
        std::sort(v.begin(), v.end());
        out[0] = a_ * v[0] + b_ * v[1];
        if (orderings() == 2) out[1] = a_ * v[1] + b_ * v[0];
    }
    double evaluate_ordered(std::span<const double> s) const override {
        return a_ * s[0] + b_ * s[1];
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions& opts) const override {
        // iid arguments: both orderings share one law
        auto g = [&](double y) { return scaled_cdf(d, a_, t - b_ * y); };
        return clamp01(expect(d, g, opts));
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        const double p1 = scaled_cdf(d, b_, t - a_ * x);
        const double p2 = scaled_cdf(d, a_, t - b_ * x);
        return clamp01(0.5 * (p1 + p2));
    }

private:
    double a_, b_;
};

class SheppPair final : public SubsetStatistic {
public:
    SheppPair() : SubsetStatistic("shepp", 2) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = evaluate_ordered(s);
    }
    double evaluate_ordered(std::span<const double> s) const override {
        const double x = s[0], y = s[1];
        const double r = std::hypot(x, y);
        return r == 0.0 ? 0.0 : 2.0 * x * y / r;
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions& opts) const override {
        auto g = [&](double x) { return cond_value(d, x, t); };
        const std::array<double, 2> bp{-0.5 * t, 0.5 * t};
        return clamp01(expect(d, g, opts, bp));
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        return cond_value(d, x, t);
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(2.0 * std::abs(x));
        out.push_back(-2.0 * std::abs(x));
    }
    void cdf_breakpoints(double t, std::vector<double>& out) const override {
        out.push_back(0.5 * t);
        out.push_back(-0.5 * t);
    }

private:
    static double cond_value(const Distribution& d, double x, double t) {
        if (x == 0.0) return t > 0.0 ? 1.0 : 0.0;
        const double ax = std::abs(x);
        if (t >= 2.0 * ax) return 1.0;
        if (t <= -2.0 * ax) return 0.0;
        // 2 x y / sqrt(x^2 + y^2) is monotone in y; invert at level t.
        const double ystar = t * ax / std::sqrt(4.0 * x * x - t * t);
        return x > 0.0 ? d.cdf(ystar) : d.survival(-ystar);
    }
};

class RatioMinPair final : public SubsetStatistic {
public:
    RatioMinPair() : SubsetStatistic("ratio-min", 2) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = evaluate_ordered(s);
    }
    double evaluate_ordered(std::span<const double> s) const override {
        if (!(s[0] > 0.0) || !(s[1] > 0.0)) {
            throw DomainError("ratio-min requires strictly positive arguments");
        }
        return std::min(s[0] / s[1], s[1] / s[0]);
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions& opts) const override {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        auto g = [&](double y) { return d.cdf(t * y); };
        return clamp01(2.0 * expect(d, g, opts));
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        return clamp01(d.survival(x / t) + d.cdf(t * x));
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        if (x > 0.0 && x <= 1.0) out.push_back(x);
    }
};

class AbsValueStat final : public SubsetStatistic {
public:
    AbsValueStat() : SubsetStatistic("abs-value", 1) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = std::abs(s[0]);
    }
    double evaluate_ordered(std::span<const double> a) const override { return std::abs(a[0]); }
    double cdf(const Distribution& d, double t, const QuadratureOptions&) const override {
        return t <= 0.0 ? 0.0 : clamp01(d.cdf(t) - d.cdf(-t));
    }
    double cond_cdf(const Distribution&, double x, double t,
                    const QuadratureOptions&) const override {
        return std::abs(x) < t ? 1.0 : 0.0;
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(std::abs(x));
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        for (double v : sorted) out.push_back({std::abs(v), 1.0});
        return true;
    }
};

class AbsMaxPair final : public SubsetStatistic {
public:
    AbsMaxPair() : SubsetStatistic("abs-max-2", 2) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = std::abs(std::max(s[0], s[1]));
    }
    double evaluate_ordered(std::span<const double> a) const override {
        return std::abs(std::max(a[0], a[1]));
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions&) const override {
        if (t <= 0.0) return 0.0;
        const double ft = d.cdf(t), fmt = d.cdf(-t);
        return clamp01(ft * ft - fmt * fmt);
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        if (t <= 0.0 || x >= t) return 0.0;
        if (x > -t) return d.cdf(t);
        return clamp01(d.cdf(t) - d.cdf(-t));
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(std::abs(x));
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        for (std::size_t j = 1; j < sorted.size(); ++j) {
            out.push_back({std::abs(sorted[j]), static_cast<double>(j)});
        }
        return true;
    }
};

class AbsExtremeOfK final : public SubsetStatistic {
public:
    AbsExtremeOfK(int k, bool minimum)
        : SubsetStatistic(std::string("abs-") + (minimum ? "min-" : "max-") + std::to_string(k), k),
          k_(k),
          min_(minimum) {}
    void subset_values(std::span<const double> s, std::span<double> out) const override {
        out[0] = evaluate_ordered(s);
    }
    double evaluate_ordered(std::span<const double> s) const override {
        const double v = min_ ? *std::min_element(s.begin(), s.end())
                              : *std::max_element(s.begin(), s.end());
        return std::abs(v);
    }
    double cdf(const Distribution& d, double t, const QuadratureOptions&) const override {
        if (t <= 0.0) return 0.0;
        if (min_) {
            const double a = d.survival(-t), b = d.survival(t);
            return clamp01(std::pow(a, k_) - std::pow(b, k_));
        }
        const double a = d.cdf(t), b = d.cdf(-t);
        return clamp01(std::pow(a, k_) - std::pow(b, k_));
    }
    double cond_cdf(const Distribution& d, double x, double t,
                    const QuadratureOptions&) const override {
        if (t <= 0.0) return 0.0;
        if (min_) {
            if (x <= -t) return 0.0;
            const double a = std::pow(d.survival(-t), k_ - 1);
            if (x < t) return clamp01(a);
            return clamp01(a - std::pow(d.survival(t), k_ - 1));
        }
        if (x >= t) return 0.0;
        const double a = std::pow(d.cdf(t), k_ - 1);
        if (x > -t) return clamp01(a);
        return clamp01(a - std::pow(d.cdf(-t), k_ - 1));
    }
    void cond_breakpoints(double x, std::vector<double>& out) const override {
        out.push_back(std::abs(x));
    }
    bool weighted_jumps(std::span<const double> sorted,
                        std::vector<WeightedJump>& out) const override {
        const std::size_t n = sorted.size();
        const std::size_t kk = static_cast<std::size_t>(k_);
        for (std::size_t i = 0; i < n; ++i) {
            const double w = min_ ? binom(n - 1 - i, kk - 1) : binom(i, kk - 1);
            if (w > 0.0) out.push_back({std::abs(sorted[i]), w});
        }
        return true;
    }

private:
    int k_;
    bool min_;
};

}  // namespace

double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return std::round(r);
}

StatPtr make_identity() { return std::make_shared<IdentityStat>(); }
StatPtr make_scaled_identity(double factor, std::string name) {
    return std::make_shared<ScaledIdentityStat>(factor, std::move(name));
}
StatPtr make_scaled_min_pair(double factor, std::string name) {
    return std::make_shared<ScaledMinPair>(factor, std::move(name));
}
StatPtr make_spacing_med_min3() { return std::make_shared<SpacingMedMin3>(); }
StatPtr make_abs_diff_pair() { return std::make_shared<AbsDiffPair>(); }
StatPtr make_max_of_k(int k) { return std::make_shared<MaxOfK>(k); }
StatPtr make_harmonic_sum(int k) { return std::make_shared<HarmonicSumK>(k); }
StatPtr make_linear_pair(double a, double b, std::string name) {
    return std::make_shared<LinearPairStat>(a, b, std::move(name));
}
StatPtr make_shepp_pair() { return std::make_shared<SheppPair>(); }
StatPtr make_ratio_min_pair() { return std::make_shared<RatioMinPair>(); }
StatPtr make_abs_value() { return std::make_shared<AbsValueStat>(); }
StatPtr make_abs_max_pair() { return std::make_shared<AbsMaxPair>(); }
StatPtr make_abs_extreme_of_k(int k, bool minimum) {
    return std::make_shared<AbsExtremeOfK>(k, minimum);
}

}  // namespace charfit
