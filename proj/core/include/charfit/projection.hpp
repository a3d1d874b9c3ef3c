#pragma once

#include <functional>
#include <utility>

#include "charfit/distributions.hpp"
#include "charfit/kernel.hpp"

namespace charfit {

/// Centered one-dimensional projection of a kernel and its variance under a
/// null law: psi~(x) = E[Psi | X1 = x] - E[Psi], delta2 = E psi~^2.
struct ProjectionProfile {
    std::function<double(double)> psi_centered;
    double delta2 = 0.0;
};

ProjectionProfile projection_profile(const Kernel& kernel, const Distribution& null,
                                     const QuadratureOptions& opts = {});

/// Delta^2 = Var E[Psi | X1] under the null, by adaptive quadrature.
double projection_variance(const Kernel& kernel, const Distribution& null,
                           const QuadratureOptions& opts = {});

/// E[Psi] under the null (zero for centered characterization kernels, up to
/// quadrature error).
double kernel_mean(const Kernel& kernel, const Distribution& null,
                   const QuadratureOptions& opts = {});

/// (theta(F), m^2 Delta^2): the limit mean and the variance of sqrt(n) U_n in
/// the Hoeffding normal limit. Throws DegeneracyError when Delta^2 vanishes.
std::pair<double, double> clt_params(const Kernel& kernel, const Distribution& null,
                                     const QuadratureOptions& opts = {});

}  // namespace charfit
