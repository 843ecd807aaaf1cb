#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bnevo {

struct SampleSummary {
    int n = 0;
    double mean = 0.0;
    double standard_deviation = 0.0;  // sample sd, n-1 normalization
};

inline SampleSummary summarize(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    SampleSummary s;
    s.n = int(values.size());
    for (double v : values) s.mean += v;
    s.mean /= double(s.n);
    if (s.n > 1) {
        double acc = 0.0;
        for (double v : values) acc += (v - s.mean) * (v - s.mean);
        s.standard_deviation = std::sqrt(acc / double(s.n - 1));
    }
    return s;
}

struct MannWhitneyResult {
    double u = 0.0;            // statistic for the first sample: wins plus half-ties
    double p_two_sided = 1.0;  // normal approximation, tie- and continuity-corrected
};

inline MannWhitneyResult mann_whitney_u(const std::vector<double>& a,
                                        const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("mann_whitney_u: empty sample");
    const double n1 = double(a.size());
    const double n2 = double(b.size());

    double u = 0.0;
    for (double x : a)
        for (double y : b) {
            if (x > y)
                u += 1.0;
            else if (x == y)
                u += 0.5;
        }

    // tie correction over the pooled sample
    std::vector<double> pooled;
    pooled.reserve(a.size() + b.size());
    pooled.insert(pooled.end(), a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::sort(pooled.begin(), pooled.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < pooled.size();) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j] == pooled[i]) ++j;
        const double t = double(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    const double n = n1 + n2;
    const double mu = n1 * n2 / 2.0;
    const double sigma_sq =
        n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));

    MannWhitneyResult res;
    res.u = u;
    if (sigma_sq <= 0.0) return res;  // fully tied pooled sample
    double z = u - mu;
    z -= 0.5 * (z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0));  // continuity correction
    z /= std::sqrt(sigma_sq);
    res.p_two_sided = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
    return res;
}

}  // namespace bnevo
