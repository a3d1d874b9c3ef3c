#include "charfit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "charfit/errors.hpp"

namespace charfit {
namespace {

using boost::math::quadrature::tanh_sinh;

tanh_sinh<double>& integrator() {
    thread_local tanh_sinh<double> instance(15);
    return instance;
}

// Splits [a, b] at the interior breakpoints and integrates each panel.
double integrate_panels(const Integrand& f, double a, double b,
                        std::vector<double> cuts, const QuadratureOptions& opts,
                        const char* what) {
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                              [&](double c) { return c < a || c > b; }),
               cuts.end());

    const double term_tol = std::clamp(opts.rel_tol * 1e-2, 1e-15, 1e-6);
    double total = 0.0;
    double err_total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] <= cuts[i]) continue;
        double err = 0.0, l1 = 0.0;
        double v;
        try {
            v = integrator().integrate(f, cuts[i], cuts[i + 1], term_tol, &err, &l1);
        } catch (const std::exception& e) {
            throw NumericError(std::string(what) + ": " + e.what());
        }
        if (!std::isfinite(v)) {
            throw NumericError(std::string(what) + ": non-finite panel value");
        }
        total += v;
        err_total += err;
    }
    const double budget = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    if (err_total > 10.0 * budget) {
        throw NumericError(std::string(what) + ": quadrature did not converge",
                           err_total);
    }
    return total;
}

}  // namespace

double integrate(const Integrand& f, double a, double b,
                 const QuadratureOptions& opts,
                 std::span<const double> breakpoints) {
    if (!(a < b)) return 0.0;
    std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
    return integrate_panels(f, a, b, std::move(cuts), opts, "integrate");
}

double integrate_semi_infinite(const Integrand& f, double origin,
                               const QuadratureOptions& opts,
                               std::span<const double> breakpoints) {
    auto g = [&f, origin](double u) {
        const double s = origin - std::log(u);
        const double fv = f(s);
        if (fv == 0.0) return 0.0;
        return fv / u;
    };
    std::vector<double> cuts;
    cuts.reserve(breakpoints.size());
    for (double s : breakpoints) {
        if (s > origin && std::isfinite(s)) cuts.push_back(std::exp(origin - s));
    }
    return integrate_panels(g, 0.0, 1.0, std::move(cuts), opts,
                            "integrate_semi_infinite");
}

double integrate_real_line(const Integrand& f, const QuadratureOptions& opts,
                           std::span<const double> breakpoints) {
    auto g = [&f](double v) {
        const double s = std::tan(v);
        if (!std::isfinite(s)) return 0.0;
        const double fv = f(s);
        if (fv == 0.0) return 0.0;
        return fv * (1.0 + s * s);
    };
    std::vector<double> cuts{0.0};
    for (double s : breakpoints) {
        if (std::isfinite(s)) cuts.push_back(std::atan(s));
    }
    const double half_pi = std::acos(0.0);
    return integrate_panels(g, -half_pi, half_pi, std::move(cuts), opts,
                            "integrate_real_line");
}

}  // namespace charfit
