#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "charfit/sample.hpp"
#include "charfit/subset_stat.hpp"

namespace charfit {

struct TestResult {
    enum class Kind { integral, kolmogorov };
    Kind kind;
    double value;
    std::uint32_t n;
    std::string test_name;
};

/// Right-continuous-by-counts step function over all r-subsets of a sample:
/// evaluation uses the strict convention, value_below(t) = #{g < t} / total,
/// which is the left limit at jump points.
class UEmpiricalCdf {
public:
    /// Uses the statistic's counting construction when it has one, otherwise
    /// enumerates subsets. Both produce the identical jump multiset.
    static UEmpiricalCdf build(const Sample& sample, const SubsetStatistic& stat);
    /// Reference path: always enumerates the C(n, r) subsets.
    static UEmpiricalCdf build_enumerated(const Sample& sample, const SubsetStatistic& stat);

    double value_below(double t) const;  // P_n(g < t)
    double value_at(double t) const;     // P_n(g <= t)

    std::span<const double> jump_locations() const { return jumps_; }
    std::span<const double> cumulative_weights() const { return cum_; }
    int subset_degree() const { return degree_; }
    double total_subsets() const { return total_subsets_; }

    std::uint32_t sample_n() const { return sample_n_; }
    std::uint64_t sample_tag() const { return sample_tag_; }

private:
    static UEmpiricalCdf from_jumps(std::vector<WeightedJump> raw, int degree,
                                    double total_units, double total_subsets,
                                    const Sample& sample);

    std::vector<double> jumps_;  // sorted unique
    std::vector<double> cum_;    // cumulative weight fractions, last == 1
    int degree_ = 0;
    double total_subsets_ = 0;
    std::uint32_t sample_n_ = 0;
    std::uint64_t sample_tag_ = 0;
};

/// I_n = (1/n) sum_k [L1(X_k) - L2(X_k)] with strict-inequality evaluation.
TestResult integral_statistic(const UEmpiricalCdf& l1, const UEmpiricalCdf& l2,
                              const Sample& sample, std::string test_name = "integral");

/// D_n = sup_t |L1(t) - L2(t)|, exact over the union of jump locations with
/// both one-sided limits.
TestResult kolmogorov_statistic(const UEmpiricalCdf& l1, const UEmpiricalCdf& l2,
                                std::string test_name = "kolmogorov");

/// Enumerates all r-subsets of `sorted`, appending one weighted jump per
/// argument ordering. Throws NumericError when the workload exceeds `max_units`.
void enumerate_jumps(std::span<const double> sorted, const SubsetStatistic& stat,
                     std::vector<WeightedJump>& out, double max_units = 5e7);

}  // namespace charfit
