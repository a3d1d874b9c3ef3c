#include "charfit/characterizations.hpp"

#include <algorithm>
#include <cmath>

#include "charfit/errors.hpp"

namespace charfit {
namespace {

bool domain_accepts(Domain required, Domain actual) {
    if (required == Domain::real) return true;
    if (required == Domain::nonnegative) {
        return actual == Domain::nonnegative || actual == Domain::unit_interval;
    }
    return actual == Domain::unit_interval;
}

// Counts of subset values strictly below / at-or-below each candidate,
// accumulated without materializing the value multiset.
struct CountedCdf {
    std::vector<double> candidates;  // sorted unique
    std::vector<double> below;       // cumulative fractions
    std::vector<double> at;

    double value_below(double t) const {
        const auto it = std::lower_bound(candidates.begin(), candidates.end(), t);
        const auto i = static_cast<std::size_t>(it - candidates.begin());
        if (it != candidates.end() && *it == t) return below[i];
        // Only ever queried at candidate locations; the fallback is the
        // tightest bound available.
        return i == 0 ? 0.0 : at[i - 1];
    }
    double lt_at_candidate(std::size_t i) const { return below[i]; }
    double le_at_candidate(std::size_t i) const { return at[i]; }
};

CountedCdf counted_cdf(const Sample& sample, const SubsetStatistic& stat,
                       std::vector<double> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    const std::size_t c = candidates.size();
    std::vector<double> lt(c + 1, 0.0), le(c + 1, 0.0);

    const auto sorted = sample.sorted_values();
    const int r = stat.degree();
    const std::size_t n = sorted.size();
    std::vector<std::size_t> idx(r);
    std::vector<double> subset(r);
    std::vector<double> values(stat.orderings());
    for (int i = 0; i < r; ++i) idx[i] = i;
    double total = 0.0;
    while (true) {
        for (int i = 0; i < r; ++i) subset[i] = sorted[idx[i]];
        stat.subset_values(subset, values);
        for (double v : values) {
            // v < cand[i] for i >= upper_bound; v <= cand[i] for i >= lower_bound
            const std::size_t a = static_cast<std::size_t>(
                std::upper_bound(candidates.begin(), candidates.end(), v) - candidates.begin());
            const std::size_t b = static_cast<std::size_t>(
                std::lower_bound(candidates.begin(), candidates.end(), v) - candidates.begin());
            lt[a] += 1.0;
            le[b] += 1.0;
            total += 1.0;
        }
        int pos = r - 1;
        while (pos >= 0 && idx[pos] == n - static_cast<std::size_t>(r - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    CountedCdf out;
    out.candidates = std::move(candidates);
    out.below.resize(c);
    out.at.resize(c);
    double acc_lt = 0.0, acc_le = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
        acc_lt += lt[i];
        acc_le += le[i];
        out.below[i] = acc_lt / total;
        out.at[i] = acc_le / total;
    }
    return out;
}

double enumeration_units(const Sample& sample, const SubsetStatistic& stat) {
    return binom(sample.n(), stat.degree()) * stat.orderings();
}

constexpr double kMaterializeLimit = 2e6;

TestResult evaluate_pair(const Sample& sample, const SubsetStatistic& g1,
                         const SubsetStatistic& g2, TestResult::Kind kind,
                         std::string name) {
    std::vector<WeightedJump> probe;
    const bool fast1 = g1.weighted_jumps(sample.sorted_values(), probe);
    probe.clear();
    const bool fast2 = g2.weighted_jumps(sample.sorted_values(), probe);
    const double units1 = fast1 ? 0.0 : enumeration_units(sample, g1);
    const double units2 = fast2 ? 0.0 : enumeration_units(sample, g2);

    if (std::max(units1, units2) <= kMaterializeLimit) {
        const auto l1 = UEmpiricalCdf::build(sample, g1);
        const auto l2 = UEmpiricalCdf::build(sample, g2);
        return kind == TestResult::Kind::integral
                   ? integral_statistic(l1, l2, sample, std::move(name))
                   : kolmogorov_statistic(l1, l2, std::move(name));
    }

    // One side is too large to materialize: stream it against the candidate
    // set of the cheap side. The sup over t of |L1 - L2| is attained at a
    // one-sided limit of a jump of either function, and between jumps of the
    // small side the difference is monotone, so the small side's jump set
    // suffices.
    const bool big_is_g1 = units1 > units2;
    const SubsetStatistic& small = big_is_g1 ? g2 : g1;
    const SubsetStatistic& big = big_is_g1 ? g1 : g2;
    const auto lsmall = UEmpiricalCdf::build(sample, small);

    std::vector<double> candidates(lsmall.jump_locations().begin(),
                                   lsmall.jump_locations().end());
    candidates.insert(candidates.end(), sample.values().begin(), sample.values().end());
    const CountedCdf lbig = counted_cdf(sample, big, std::move(candidates));

    double value = 0.0;
    if (kind == TestResult::Kind::integral) {
        double acc = 0.0;
        for (double x : sample.values()) {
            const double d = lsmall.value_below(x) - lbig.value_below(x);
            acc += big_is_g1 ? -d : d;
        }
        value = acc / static_cast<double>(sample.n());
    } else {
        double best = 0.0;
        for (std::size_t i = 0; i < lbig.candidates.size(); ++i) {
            const double t = lbig.candidates[i];
            best = std::max(best, std::abs(lsmall.value_below(t) - lbig.lt_at_candidate(i)));
            best = std::max(best, std::abs(lsmall.value_at(t) - lbig.le_at_candidate(i)));
        }
        value = best;
    }
    return TestResult{kind, value, static_cast<std::uint32_t>(sample.n()), std::move(name)};
}

}  // namespace

std::size_t Characterization::min_n() const {
    return static_cast<std::size_t>(std::max(g1->degree(), g2->degree()));
}

const std::vector<Characterization>& characterization_registry() {
    static const std::vector<Characterization> reg = [] {
        std::vector<Characterization> cs;
        cs.push_back({"desu", make_identity(), make_scaled_min_pair(2.0, "2min"),
                      "exponential", Domain::nonnegative, false});
        cs.push_back({"rossberg", make_spacing_med_min3(), make_scaled_min_pair(1.0, "min2"),
                      "exponential", Domain::nonnegative, false});
        cs.push_back({"ahsanullah-exp", make_abs_diff_pair(), make_scaled_min_pair(2.0, "2min"),
                      "exponential", Domain::nonnegative, false});
        cs.push_back({"arnold-villasenor-2", make_max_of_k(2), make_harmonic_sum(2),
                      "exponential", Domain::nonnegative, false});
        cs.push_back({"arnold-villasenor-3", make_max_of_k(3), make_harmonic_sum(3),
                      "exponential", Domain::nonnegative, false});
        cs.push_back(make_polya(std::sqrt(2.0) / 2.0));
        cs.back().name = "polya";
        cs.push_back({"shepp", make_identity(), make_shepp_pair(),
                      "normal", Domain::real, true});
        cs.push_back({"puri-rubin", make_identity(), make_ratio_min_pair(),
                      "power-law", Domain::unit_interval, false});
        cs.push_back({"cauchy-rr", make_identity(),
                      make_linear_pair(1.0 / 3.0, -2.0 / 3.0, "cauchy-comb"),
                      "cauchy", Domain::real, false});
        cs.push_back({"bh-symmetry", make_abs_value(), make_abs_max_pair(),
                      "symmetric", Domain::real, false});
        for (int k = 2; k <= 4; ++k) {
            cs.push_back({"ahsanullah-symmetry-" + std::to_string(k),
                          make_abs_extreme_of_k(k, true), make_abs_extreme_of_k(k, false),
                          "symmetric", Domain::real, false});
        }
        return cs;
    }();
    return reg;
}

const Characterization& find_characterization(const std::string& name) {
    for (const auto& c : characterization_registry()) {
        if (c.name == name) return c;
    }
    throw DomainError("unknown characterization: " + name);
}

Characterization make_polya(double a) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("polya: a must lie in (0, 1)");
    const double b = std::sqrt(1.0 - a * a);
    return {"polya(" + std::to_string(a) + ")", make_identity(),
            make_linear_pair(a, b, "polya-comb"), "normal", Domain::real, true};
}

TestResult run_characterization_test(const Characterization& ch, const Sample& sample,
                                     TestResult::Kind kind) {
    if (!domain_accepts(ch.domain, sample.domain())) {
        throw DomainError("test " + ch.name + " requires " + to_string(ch.domain) +
                          " data, got " + to_string(sample.domain()));
    }
    if (sample.n() < ch.min_n()) {
        throw DegreeError("test " + ch.name + " needs n >= " + std::to_string(ch.min_n()));
    }
    if (ch.center_by_mean) {
        const Sample centered = sample.centered();
        return evaluate_pair(centered, *ch.g1, *ch.g2, kind, ch.name);
    }
    return evaluate_pair(sample, *ch.g1, *ch.g2, kind, ch.name);
}

TestResult angus_statistic(const Sample& sample) {
    if (sample.domain() == Domain::real) {
        throw DomainError("angus requires nonnegative data");
    }
    const auto xs = sample.sorted_values();
    const double n = static_cast<double>(xs.size());
    auto frac_ge = [&](double y) {  // #{X >= y} / n
        return static_cast<double>(xs.end() -
                                   std::lower_bound(xs.begin(), xs.end(), y)) / n;
    };
    auto frac_gt = [&](double y) {  // #{X > y} / n
        return static_cast<double>(xs.end() -
                                   std::upper_bound(xs.begin(), xs.end(), y)) / n;
    };
    double best = 0.0;
    for (double x : xs) {
        for (double c : {x, 0.5 * x}) {
            const double sl = frac_ge(c);
            const double left = frac_ge(2.0 * c) - sl * sl;
            const double sr = frac_gt(c);
            const double right = frac_gt(2.0 * c) - sr * sr;
            best = std::max({best, std::abs(left), std::abs(right)});
        }
    }
    return TestResult{TestResult::Kind::kolmogorov, best,
                      static_cast<std::uint32_t>(xs.size()), "angus"};
}

}  // namespace charfit
