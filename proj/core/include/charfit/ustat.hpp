#pragma once

#include "charfit/kernel.hpp"
#include "charfit/sample.hpp"

namespace charfit {

/// Exact average of the kernel over all C(n, m) unordered m-subsets.
double evaluate_u_statistic(const Sample& sample, const Kernel& kernel);

/// O(n log n) counting evaluation of the Desu kernel U-statistic; agrees
/// exactly with full enumeration.
double desu_u_statistic_fast(const Sample& sample);

}  // namespace charfit
