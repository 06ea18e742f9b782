#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace testutil {

//! two-sample Kolmogorov-Smirnov statistic (consumes copies; merge walk)
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

/*! Conservative upper bound on sup_x |F(x) - F_n(x)| given exact CDF values
 *  F[i] at an increasing grid covering the support.  Between grid points both
 *  CDFs are bracketed by their values at the cell edges, so the bound is the
 *  worst cross-difference per cell; it over-estimates by at most one cell's
 *  mass.  Atoms of F must sit on grid points.
 */
inline double sup_cdf_distance_bound(std::vector<double> samples, const std::vector<double>& grid,
                                     const std::vector<double>& F) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        // empirical CDF at the left edge and its left limit at the right edge
        const double fn_lo =
            static_cast<double>(std::upper_bound(samples.begin(), samples.end(), grid[i]) -
                                samples.begin()) /
            n;
        const double fn_hi_left =
            static_cast<double>(std::lower_bound(samples.begin(), samples.end(), grid[i + 1]) -
                                samples.begin()) /
            n;
        d = std::max(d, std::abs(F[i] - fn_lo));
        d = std::max(d, F[i + 1] - fn_lo);
        d = std::max(d, fn_hi_left - F[i]);
    }
    const double fn_end =
        static_cast<double>(std::upper_bound(samples.begin(), samples.end(), grid.back()) -
                            samples.begin()) /
        n;
    return std::max(d, std::abs(F.back() - fn_end));
}

struct PowerStats {
    double mean;
    double se; // standard error of the mean
};

//! mean and standard error of v^k over a sample
inline PowerStats empirical_power(const std::vector<double>& s, int k) {
    long double sum = 0.0L, sum2 = 0.0L;
    for (double v : s) {
        long double p = 1.0L;
        for (int i = 0; i < k; ++i) p *= v;
        sum += p;
        sum2 += p * p;
    }
    const long double n = static_cast<long double>(s.size());
    const long double mean = sum / n;
    const long double var = std::max(0.0L, sum2 / n - mean * mean);
    return {static_cast<double>(mean), static_cast<double>(std::sqrt(var / n))};
}

} // namespace testutil
