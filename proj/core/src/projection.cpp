#include "charfit/projection.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "charfit/errors.hpp"

namespace charfit {
namespace {

// theta_g = P(g(X_1..X_r) < W) with W an independent extra observation.
double stat_mean(const SubsetStatistic& g, const Distribution& d,
                 const QuadratureOptions& opts) {
    return expect(d, [&](double w) { return g.cdf(d, w, opts); }, opts);
}

// psi_g(x) = E[ sym 1{g < w} | one argument = x ] for the (r+1)-degree half kernel.
double half_projection(const SubsetStatistic& g, const Distribution& d, double x,
                       const QuadratureOptions& opts) {
    const int r = g.degree();
    std::vector<double> bp;
    g.cond_breakpoints(x, bp);
    const double expected_cond =
        expect(d, [&](double w) { return g.cond_cdf(d, x, w, opts); }, opts, bp);
    return (g.cdf(d, x, opts) + r * expected_cond) / (r + 1.0);
}

}  // namespace

ProjectionProfile projection_profile(const Kernel& kernel, const Distribution& null,
                                     const QuadratureOptions& opts) {
    ProjectionProfile out;
    if (kernel.analytic_centered_projection) {
        out.psi_centered = kernel.analytic_centered_projection;
    } else if (kernel.g1 && kernel.g2) {
        const auto g1 = kernel.g1;
        const auto g2 = kernel.g2;
        const int m = kernel.degree;
        const double w1 = (g1->degree() + 1.0) / m;
        const double w2 = (g2->degree() + 1.0) / m;
        // Inner integrals run tighter than the outer variance integral.
        QuadratureOptions inner = opts;
        inner.abs_tol = opts.abs_tol * 1e-1;
        inner.rel_tol = opts.rel_tol * 1e-1;
        const double th1 = stat_mean(*g1, null, inner);
        const double th2 = stat_mean(*g2, null, inner);
        auto d = std::shared_ptr<const Distribution>(&null, [](const Distribution*) {});
        out.psi_centered = [g1, g2, w1, w2, th1, th2, d, inner](double x) {
            return w1 * (half_projection(*g1, *d, x, inner) - th1) -
                   w2 * (half_projection(*g2, *d, x, inner) - th2);
        };
    } else {
        throw DomainError("projection_profile: kernel " + kernel.name +
                          " has neither analytic projection nor characterization structure");
    }
    const auto& psi = out.psi_centered;
    out.delta2 = expect(null, [&](double x) {
        const double p = psi(x);
        return p * p;
    }, opts);
    if (out.delta2 < 0.0) out.delta2 = 0.0;
    return out;
}

double projection_variance(const Kernel& kernel, const Distribution& null,
                           const QuadratureOptions& opts) {
    if (kernel.is_constant) return 0.0;
    return projection_profile(kernel, null, opts).delta2;
}

double kernel_mean(const Kernel& kernel, const Distribution& null,
                   const QuadratureOptions& opts) {
    if (kernel.is_constant) return kernel.constant_value;
    if (kernel.g1 && kernel.g2) {
        const auto& g1 = *kernel.g1;
        const auto& g2 = *kernel.g2;
        return expect(null, [&](double w) {
            return g1.cdf(null, w, opts) - g2.cdf(null, w, opts);
        }, opts);
    }
    throw DomainError("kernel_mean: no computable structure for " + kernel.name);
}

std::pair<double, double> clt_params(const Kernel& kernel, const Distribution& null,
                                     const QuadratureOptions& opts) {
    const double delta2 = projection_variance(kernel, null, opts);
    if (delta2 <= 1e-14) {
        throw DegeneracyError("clt_params: kernel " + kernel.name +
                              " is degenerate (Delta^2 = 0); the normal scaling does not apply");
    }
    const double theta = kernel.centered ? 0.0 : kernel_mean(kernel, null, opts);
    const double m = kernel.degree;
    return {theta, m * m * delta2};
}

}  // namespace charfit
