#include "charfit/ustat.hpp"

#include <algorithm>
#include <cmath>

#include "charfit/errors.hpp"

namespace charfit {

double evaluate_u_statistic(const Sample& sample, const Kernel& kernel) {
    const std::size_t n = sample.n();
    const int m = kernel.degree;
    if (n < static_cast<std::size_t>(m)) {
        throw DegreeError("evaluate_u_statistic: n = " + std::to_string(n) +
                          " below kernel degree " + std::to_string(m));
    }
    const double subsets = binom(n, m);
    if (subsets > 5e7) {
        throw NumericError("evaluate_u_statistic: " + std::to_string(subsets) +
                           " subsets is beyond the enumeration budget");
    }
    const auto values = sample.values();
    std::vector<std::size_t> idx(m);
    std::vector<double> args(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    double acc = 0.0;
    while (true) {
        for (int i = 0; i < m; ++i) args[i] = values[idx[i]];
        const double v = kernel.evaluate(args);
        if (!std::isfinite(v)) {
            std::string where;
            for (int i = 0; i < m; ++i) where += (i ? "," : "") + std::to_string(idx[i]);
            throw NumericError("evaluate_u_statistic: kernel " + kernel.name +
                               " non-finite on subset indices {" + where + "}");
        }
        acc += v;
        int pos = m - 1;
        while (pos >= 0 &&
               idx[pos] == n - static_cast<std::size_t>(m - pos)) {
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return acc / subsets;
}

double desu_u_statistic_fast(const Sample& sample) {
    const std::size_t n = sample.n();
    if (n < 3) throw DegreeError("desu_u_statistic_fast: need n >= 3");
    const auto xs = sample.sorted_values();
    double count = 0.0;  // triples (pair, third) with 2 min(pair) < third
    for (std::size_t a = 0; a < n; ++a) {
        const auto it = std::upper_bound(xs.begin(), xs.end(), 2.0 * xs[a]);
        const double above = static_cast<double>(xs.end() - it);
        count += (static_cast<double>(n) - 2.0 - static_cast<double>(a)) * above;
    }
    return 0.5 - count / (3.0 * binom(n, 3));
}

}  // namespace charfit
