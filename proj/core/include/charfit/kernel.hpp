#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "charfit/subset_stat.hpp"

namespace charfit {

/// A symmetric U-statistic kernel. Characterization-derived kernels carry
/// their (g1, g2) structure so projections and variances can be computed
/// without multidimensional quadrature; purely functional kernels may carry
/// an analytic centered projection instead.
struct Kernel {
    std::string name;
    int degree = 0;
    std::string null_family;  // family the centering claim refers to
    bool centered = false;
    std::function<double(std::span<const double>)> evaluate;

    StatPtr g1, g2;  // set for characterization kernels
    std::function<double(double)> analytic_centered_projection;  // optional
    bool is_constant = false;
    double constant_value = 0.0;
};

/// Degree-m symmetrization of 1{g1 < w} minus 1{g2 < w}, m = max(r, s) + 1:
/// the U-statistic the integral characterization statistic is asymptotically
/// equivalent to.
Kernel make_characterization_kernel(std::string name, StatPtr g1, StatPtr g2,
                                    std::string null_family);

/// The degree-3 kernel of the Desu test of exponentiality,
/// 1/2 - (1/3)[1{2min(X,Y)<Z} + 1{2min(Y,Z)<X} + 1{2min(X,Z)<Y}],
/// with its closed-form projection attached.
Kernel desu_kernel();

/// |x - y| (the Gini mean-difference kernel; not centered).
Kernel gini_pair_kernel();

Kernel constant_kernel(double value);

/// Closed form of the Desu kernel projection:
/// psi(s) = (1/3) e^-s - 1/18 - (4/9) e^-3s, s >= 0.
double desu_projection(double s);

/// Every kernel the library registers, including the integral-statistic
/// kernels of all characterizations with degree <= 4.
const std::vector<Kernel>& kernel_registry();

}  // namespace charfit
