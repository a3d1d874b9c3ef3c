#pragma once

#include <string>
#include <vector>

#include "charfit/sample.hpp"
#include "charfit/subset_stat.hpp"
#include "charfit/uecdf.hpp"

namespace charfit {

/// A pair of sub-sample statistics whose equidistribution characterizes the
/// null family: g1(X_1..X_r) = g2(X_1..X_s) in law iff F is in the family.
struct Characterization {
    std::string name;
    StatPtr g1;
    StatPtr g2;
    std::string null_family;  // exponential | normal | power-law | cauchy | symmetric
    Domain domain;            // what the data must satisfy
    bool center_by_mean = false;

    std::size_t min_n() const;
};

/// The registered characterizations, keyed by the stable public names used
/// by the CLI: desu, rossberg, ahsanullah-exp, arnold-villasenor-{2,3},
/// polya, shepp, puri-rubin, cauchy-rr, bh-symmetry, ahsanullah-symmetry-{2,3,4}.
const std::vector<Characterization>& characterization_registry();
const Characterization& find_characterization(const std::string& name);

/// Generalized Polya characterization X =d aX + sqrt(1-a^2) Y, 0 < a < 1.
Characterization make_polya(double a);

/// Builds both U-empirical dfs (after the pre-transform, if any) and returns
/// the requested functional. Deterministic; evaluation never materializes
/// subset enumerations beyond ~10^6 values thanks to a counting path.
TestResult run_characterization_test(const Characterization& ch, const Sample& sample,
                                     TestResult::Kind kind);

/// Angus statistic sup_{x>=0} |Fbar_n(2x) - Fbar_n(x)^2|, exact over the
/// candidate set {X_i, X_i/2} with both one-sided limits.
TestResult angus_statistic(const Sample& sample);

}  // namespace charfit
