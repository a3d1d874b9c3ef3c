#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charfit {

enum class Domain { nonnegative, real, unit_interval };

std::string to_string(Domain d);

/// An immutable batch of observations. Values keep their input order; a
/// sorted copy and the sorting permutation are built once at construction.
class Sample {
public:
    Sample(std::vector<double> values, Domain domain);

    std::size_t n() const { return values_.size(); }
    Domain domain() const { return domain_; }
    std::span<const double> values() const { return values_; }
    std::span<const double> sorted_values() const { return sorted_; }
    std::span<const std::uint32_t> sorted_index() const { return sorted_index_; }
    bool has_ties() const { return has_ties_; }

    /// Stable across copies; used to detect functionals built from
    /// different samples.
    std::uint64_t fingerprint() const { return fingerprint_; }

    Sample scaled(double factor) const;
    Sample transformed(double (*f)(double), Domain new_domain) const;
    /// Subtracts the sample mean (location pre-transform for normality tests).
    Sample centered() const;

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
    std::vector<std::uint32_t> sorted_index_;
    Domain domain_;
    bool has_ties_ = false;
    std::uint64_t fingerprint_ = 0;
};

}  // namespace charfit
