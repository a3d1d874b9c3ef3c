#include "charfit/uecdf.hpp"

#include <algorithm>
#include <cmath>

#include "charfit/errors.hpp"

namespace charfit {
namespace {

void check_degree(const Sample& sample, const SubsetStatistic& stat) {
    if (sample.n() < static_cast<std::size_t>(stat.degree())) {
        throw DegreeError("sample of size " + std::to_string(sample.n()) +
                          " is smaller than the subset degree " +
                          std::to_string(stat.degree()) + " of " + stat.name());
    }
}

}  // namespace

void enumerate_jumps(std::span<const double> sorted, const SubsetStatistic& stat,
                     std::vector<WeightedJump>& out, double max_units) {
    const int r = stat.degree();
    const std::size_t n = sorted.size();
    const double units = binom(n, r) * stat.orderings();
    if (units > max_units) {
        throw NumericError("subset enumeration for " + stat.name() + " needs " +
                           std::to_string(units) + " evaluations; use a smaller sample");
    }
    out.reserve(out.size() + static_cast<std::size_t>(units));

    std::vector<std::size_t> idx(r);
    std::vector<double> subset(r);
    std::vector<double> values(stat.orderings());
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < r; ++i) subset[i] = sorted[idx[i]];
        stat.subset_values(subset, values);
        for (double v : values) {
            if (!std::isfinite(v)) {
                std::string where;
                for (int i = 0; i < r; ++i) where += (i ? "," : "") + std::to_string(idx[i]);
                throw NumericError("non-finite " + stat.name() +
                                   " value on subset indices {" + where + "}");
            }
            out.push_back({v, 1.0});
        }
        // next combination in lexicographic order
        int pos = r - 1;
        while (pos >= 0 && idx[pos] == n - static_cast<std::size_t>(r - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

UEmpiricalCdf UEmpiricalCdf::from_jumps(std::vector<WeightedJump> raw, int degree,
                                        double total_units, double total_subsets,
                                        const Sample& sample) {
    std::sort(raw.begin(), raw.end(),
              [](const WeightedJump& a, const WeightedJump& b) { return a.location < b.location; });
    UEmpiricalCdf cdf;
    cdf.degree_ = degree;
    cdf.total_subsets_ = total_subsets;
    cdf.sample_n_ = static_cast<std::uint32_t>(sample.n());
    cdf.sample_tag_ = sample.fingerprint();
    cdf.jumps_.reserve(raw.size());
    cdf.cum_.reserve(raw.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        acc += raw[i].weight;
        if (i + 1 < raw.size() && raw[i + 1].location == raw[i].location) continue;
        cdf.jumps_.push_back(raw[i].location);
        cdf.cum_.push_back(acc / total_units);
    }
    if (!cdf.cum_.empty()) cdf.cum_.back() = 1.0;  // absorb rounding in the last step
    return cdf;
}

UEmpiricalCdf UEmpiricalCdf::build(const Sample& sample, const SubsetStatistic& stat) {
    check_degree(sample, stat);
    std::vector<WeightedJump> raw;
    if (stat.weighted_jumps(sample.sorted_values(), raw)) {
        const double total = binom(sample.n(), stat.degree()) * stat.orderings();
        return from_jumps(std::move(raw), stat.degree(), total,
                          binom(sample.n(), stat.degree()), sample);
    }
    return build_enumerated(sample, stat);
}

UEmpiricalCdf UEmpiricalCdf::build_enumerated(const Sample& sample, const SubsetStatistic& stat) {
    check_degree(sample, stat);
    std::vector<WeightedJump> raw;
    enumerate_jumps(sample.sorted_values(), stat, raw);
    const double total = binom(sample.n(), stat.degree()) * stat.orderings();
    return from_jumps(std::move(raw), stat.degree(), total,
                      binom(sample.n(), stat.degree()), sample);
}

double UEmpiricalCdf::value_below(double t) const {
    const auto it = std::lower_bound(jumps_.begin(), jumps_.end(), t);
    if (it == jumps_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

double UEmpiricalCdf::value_at(double t) const {
    const auto it = std::upper_bound(jumps_.begin(), jumps_.end(), t);
    if (it == jumps_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

TestResult integral_statistic(const UEmpiricalCdf& l1, const UEmpiricalCdf& l2,
                              const Sample& sample, std::string test_name) {
    if (l1.sample_tag() != l2.sample_tag() || l1.sample_tag() != sample.fingerprint()) {
        throw ConsistencyError("integral_statistic: functionals built from different samples");
    }
    double acc = 0.0;
    for (double x : sample.values()) {
        acc += l1.value_below(x) - l2.value_below(x);
    }
    const double v = acc / static_cast<double>(sample.n());
    return TestResult{TestResult::Kind::integral, v,
                      static_cast<std::uint32_t>(sample.n()), std::move(test_name)};
}

TestResult kolmogorov_statistic(const UEmpiricalCdf& l1, const UEmpiricalCdf& l2,
                                std::string test_name) {
    if (l1.jump_locations().empty() || l2.jump_locations().empty()) {
        throw ConsistencyError("kolmogorov_statistic: empty U-empirical df");
    }
    if (l1.sample_tag() != l2.sample_tag()) {
        throw ConsistencyError("kolmogorov_statistic: functionals built from different samples");
    }
    const auto j1 = l1.jump_locations();
    const auto c1 = l1.cumulative_weights();
    const auto j2 = l2.jump_locations();
    const auto c2 = l2.cumulative_weights();
    double best = 0.0;
    double v1 = 0.0, v2 = 0.0;
    std::size_t i1 = 0, i2 = 0;
    while (i1 < j1.size() || i2 < j2.size()) {
        const double t = [&] {
            if (i1 == j1.size()) return j2[i2];
            if (i2 == j2.size()) return j1[i1];
            return std::min(j1[i1], j2[i2]);
        }();
        best = std::max(best, std::abs(v1 - v2));  // value on the interval ending at t
        if (i1 < j1.size() && j1[i1] == t) v1 = c1[i1++];
        if (i2 < j2.size() && j2[i2] == t) v2 = c2[i2++];
        best = std::max(best, std::abs(v1 - v2));  // value just after t
    }
    const std::uint32_t n = l1.sample_n();
    return TestResult{TestResult::Kind::kolmogorov, best, n, std::move(test_name)};
}

}  // namespace charfit
