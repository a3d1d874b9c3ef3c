#include "charfit/sample.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "charfit/errors.hpp"

namespace charfit {
namespace {

bool in_domain(double v, Domain d) {
    switch (d) {
        case Domain::nonnegative: return v >= 0.0;
        case Domain::real: return true;
        case Domain::unit_interval: return v > 0.0 && v <= 1.0;
    }
    return false;
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed ^ 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::string to_string(Domain d) {
    switch (d) {
        case Domain::nonnegative: return "nonnegative";
        case Domain::real: return "real";
        case Domain::unit_interval: return "unit-interval";
    }
    return "?";
}

Sample::Sample(std::vector<double> values, Domain domain)
    : values_(std::move(values)), domain_(domain) {
    if (values_.empty()) throw DomainError("Sample: need at least one observation");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("Sample: non-finite value at index " + std::to_string(i));
        }
        if (!in_domain(values_[i], domain_)) {
            throw DomainError("Sample: value " + std::to_string(values_[i]) +
                              " at index " + std::to_string(i) +
                              " outside domain " + to_string(domain_));
        }
    }
    sorted_index_.resize(values_.size());
    std::iota(sorted_index_.begin(), sorted_index_.end(), 0u);
    std::stable_sort(sorted_index_.begin(), sorted_index_.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return values_[a] < values_[b]; });
    sorted_.resize(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) sorted_[i] = values_[sorted_index_[i]];
    has_ties_ = std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end();
    fingerprint_ = fnv1a(values_.data(), values_.size() * sizeof(double),
                         values_.size());
}

Sample Sample::scaled(double factor) const {
    if (!(factor > 0.0)) throw DomainError("Sample::scaled: factor must be positive");
    std::vector<double> v(values_.begin(), values_.end());
    for (double& x : v) x *= factor;
    return Sample(std::move(v), domain_);
}

Sample Sample::transformed(double (*f)(double), Domain new_domain) const {
    std::vector<double> v(values_.begin(), values_.end());
    for (double& x : v) x = f(x);
    return Sample(std::move(v), new_domain);
}

Sample Sample::centered() const {
    const double mean = std::accumulate(values_.begin(), values_.end(), 0.0) /
                        static_cast<double>(values_.size());
    std::vector<double> v(values_.begin(), values_.end());
    for (double& x : v) x -= mean;
    return Sample(std::move(v), Domain::real);
}

}  // namespace charfit
