#pragma once

#include <functional>
#include <span>
#include <vector>

namespace charfit {

/// Tolerances for adaptive quadrature. An integral I is accepted when the
/// error estimate is below max(abs_tol, rel_tol * |I|).
struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
};

using Integrand = std::function<double(double)>;

/// Integral over a finite interval [a, b]. Interior breakpoints split the
/// range so kinks and jump discontinuities land on panel boundaries.
double integrate(const Integrand& f, double a, double b,
                 const QuadratureOptions& opts = {},
                 std::span<const double> breakpoints = {});

/// Integral over [origin, inf), computed on (0, 1] through u = exp(origin - s).
double integrate_semi_infinite(const Integrand& f, double origin = 0.0,
                               const QuadratureOptions& opts = {},
                               std::span<const double> breakpoints = {});

/// Integral over the whole real line through s = tan(v). Handles both
/// exponential and algebraic (Cauchy-type) tail decay.
double integrate_real_line(const Integrand& f,
                           const QuadratureOptions& opts = {},
                           std::span<const double> breakpoints = {});

}  // namespace charfit
