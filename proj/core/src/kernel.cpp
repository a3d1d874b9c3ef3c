#include "charfit/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "charfit/errors.hpp"

namespace charfit {
namespace {

// Average of 1{g(args) < w} over all (degree+1)-subsets of x, all threshold
// slots, and all argument orderings. Arguments are sorted first so the value
// is exactly permutation invariant.
double half_kernel(const SubsetStatistic& g, std::span<const double> x) {
    const int m = static_cast<int>(x.size());
    const int d = g.degree();
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::size_t> idx(d + 1);
    std::vector<double> args(d);
    std::vector<double> values(g.orderings());
    for (int i = 0; i <= d; ++i) idx[i] = i;
    double acc = 0.0;
    double blocks = 0.0;
    while (true) {
        for (std::size_t w = 0; w < idx.size(); ++w) {
            const double threshold = sorted[idx[w]];
            int k = 0;
            for (std::size_t j = 0; j < idx.size(); ++j) {
                if (j != w) args[k++] = sorted[idx[j]];
            }
            g.subset_values(args, values);
            double hits = 0.0;
            for (double v : values) hits += (v < threshold) ? 1.0 : 0.0;
            acc += hits / static_cast<double>(values.size());
            blocks += 1.0;
        }
        int pos = d;
        while (pos >= 0 &&
               idx[pos] == static_cast<std::size_t>(m) - static_cast<std::size_t>(d + 1 - pos)) {
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return acc / blocks;
}

}  // namespace

Kernel make_characterization_kernel(std::string name, StatPtr g1, StatPtr g2,
                                    std::string null_family) {
    Kernel k;
    k.name = std::move(name);
    k.degree = std::max(g1->degree(), g2->degree()) + 1;
    k.null_family = std::move(null_family);
    k.centered = true;
    k.g1 = g1;
    k.g2 = g2;
    k.evaluate = [g1, g2](std::span<const double> x) {
        return half_kernel(*g1, x) - half_kernel(*g2, x);
    };
    return k;
}

double desu_projection(double s) {
    if (s < 0.0) throw DomainError("desu_projection: argument must be nonnegative");
    return std::exp(-s) / 3.0 - 1.0 / 18.0 - (4.0 / 9.0) * std::exp(-3.0 * s);
}

Kernel desu_kernel() {
    Kernel k;
    k.name = "desu";
    k.degree = 3;
    k.null_family = "exponential";
    k.centered = true;
    k.g1 = make_identity();
    k.g2 = make_scaled_min_pair(2.0, "2min");
    k.evaluate = [](std::span<const double> x) {
        std::array<double, 3> a{x[0], x[1], x[2]};
        std::sort(a.begin(), a.end());
        double hits = 0.0;
        hits += (2.0 * std::min(a[0], a[1]) < a[2]) ? 1.0 : 0.0;
        hits += (2.0 * std::min(a[1], a[2]) < a[0]) ? 1.0 : 0.0;
        hits += (2.0 * std::min(a[0], a[2]) < a[1]) ? 1.0 : 0.0;
        return 0.5 - hits / 3.0;
    };
    k.analytic_centered_projection = [](double s) { return desu_projection(s); };
    return k;
}

Kernel gini_pair_kernel() {
    Kernel k;
    k.name = "gini-pair";
    k.degree = 2;
    k.null_family = "exponential";
    k.centered = false;
    k.evaluate = [](std::span<const double> x) { return std::abs(x[0] - x[1]); };
    return k;
}

Kernel constant_kernel(double value) {
    Kernel k;
    k.name = "constant";
    k.degree = 1;
    k.centered = false;
    k.is_constant = true;
    k.constant_value = value;
    k.evaluate = [value](std::span<const double>) { return value; };
    k.analytic_centered_projection = [](double) { return 0.0; };
    return k;
}

const std::vector<Kernel>& kernel_registry() {
    static const std::vector<Kernel> kernels = [] {
        std::vector<Kernel> ks;
        ks.push_back(desu_kernel());
        ks.push_back(make_characterization_kernel(
            "rossberg", make_spacing_med_min3(), make_scaled_min_pair(1.0, "min2"),
            "exponential"));
        ks.push_back(make_characterization_kernel(
            "ahsanullah-exp", make_abs_diff_pair(), make_scaled_min_pair(2.0, "2min"),
            "exponential"));
        ks.push_back(make_characterization_kernel(
            "arnold-villasenor-2", make_max_of_k(2), make_harmonic_sum(2), "exponential"));
        ks.push_back(make_characterization_kernel(
            "arnold-villasenor-3", make_max_of_k(3), make_harmonic_sum(3), "exponential"));
        const double r2 = std::sqrt(2.0) / 2.0;
        ks.push_back(make_characterization_kernel(
            "polya", make_identity(), make_linear_pair(r2, r2, "polya-comb"), "normal"));
        ks.push_back(make_characterization_kernel(
            "shepp", make_identity(), make_shepp_pair(), "normal"));
        ks.push_back(make_characterization_kernel(
            "puri-rubin", make_identity(), make_ratio_min_pair(), "power-law"));
        ks.push_back(make_characterization_kernel(
            "cauchy-rr", make_identity(),
            make_linear_pair(1.0 / 3.0, -2.0 / 3.0, "cauchy-comb"), "cauchy"));
        ks.push_back(make_characterization_kernel(
            "bh-symmetry", make_abs_value(), make_abs_max_pair(), "symmetric"));
        ks.push_back(make_characterization_kernel(
            "ahsanullah-symmetry-2", make_abs_extreme_of_k(2, true),
            make_abs_extreme_of_k(2, false), "symmetric"));
        ks.push_back(make_characterization_kernel(
            "ahsanullah-symmetry-3", make_abs_extreme_of_k(3, true),
            make_abs_extreme_of_k(3, false), "symmetric"));
        ks.push_back(gini_pair_kernel());
        return ks;
    }();
    return kernels;
}

}  // namespace charfit
