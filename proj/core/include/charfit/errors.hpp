#pragma once

#include <stdexcept>
#include <string>

namespace charfit {

/// Sample size too small for the requested subset degree.
class DegreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the domain a statistic or family requires.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two objects that must share a source sample do not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A projection variance of zero where a normal limit was requested.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical routine failed to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tolerance(achieved) {}
    explicit NumericError(const std::string& what)
        : std::runtime_error(what), achieved_tolerance(0.0) {}

    double achieved_tolerance;
};

}  // namespace charfit
