#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "likert/consensus.hpp"
#include "likert/errors.hpp"
#include "likert/rng.hpp"
#include "likert/survey.hpp"

namespace likert {

enum class SimplexSampler {
    /// Normalized independent unit exponentials: the flat Dirichlet, exactly
    /// uniform on the simplex. Default.
    flat_dirichlet,
    /// Normalized independent U(0,1) draws. NOT uniform on the simplex (the
    /// density piles up around the barycentre); provided because this common
    /// shortcut is what several published simulation summaries actually
    /// reflect, so comparison runs need it.
    ratio_uniform,
};

inline const char* sampler_name(SimplexSampler s) {
    return s == SimplexSampler::flat_dirichlet ? "flat_dirichlet" : "ratio_uniform";
}

struct SimulationConfig {
    int n_categories = 3;
    int n_points = 10000;
    std::uint64_t seed = 42;
    SimplexSampler sampler = SimplexSampler::flat_dirichlet;
};

/// One random distribution on the (N-1)-simplex, scaled to sum to 100.
inline SurveyDistribution sample_uniform_simplex(int n_categories, SplitMix64& rng,
                                                 SimplexSampler sampler =
                                                     SimplexSampler::flat_dirichlet) {
    if (n_categories < 2)
        throw ValidationError(Errc::dimension_too_small, "need at least 2 categories");
    std::vector<double> w(static_cast<std::size_t>(n_categories));
    for (;;) {
        double sum = 0.0;
        for (double& x : w) {
            x = sampler == SimplexSampler::flat_dirichlet ? rng.exponential()
                                                          : rng.uniform01();
            sum += x;
        }
        if (sum > 0.0) break; // exponential draws can all be zero only in theory
    }
    return SurveyDistribution::from_weights(std::move(w));
}

/// Sampling distribution of the consensus metric: `n_points` independent
/// draws. Identical config (including seed) gives a bitwise-identical sample.
inline std::vector<double> simulate_consensus(const SimulationConfig& config) {
    if (config.n_categories < 2)
        throw ValidationError(Errc::dimension_too_small, "need at least 2 categories");
    if (config.n_points < 1)
        throw ValidationError(Errc::empty_input, "n_points must be positive");
    SplitMix64 rng(config.seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(config.n_points));
    for (int i = 0; i < config.n_points; ++i)
        out.push_back(consensus(sample_uniform_simplex(config.n_categories, rng,
                                                       config.sampler)));
    return out;
}

struct SummaryStats {
    double mean = 0;
    double std_dev = 0;
    double min = 0;
    double max = 0;
    double range = 0;
    double iqr = 0;
};

namespace detail {

// Quantile by linear interpolation between order statistics at position
// p*(n-1), 0-based (the common spreadsheet rule). `sorted` must be ascending.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace detail

/// Mean, sample (n-1) standard deviation, extremes, and interquartile range.
inline SummaryStats summary_stats(const std::vector<double>& sample) {
    if (sample.empty())
        throw ValidationError(Errc::empty_sample, "empty sample");
    SummaryStats s;
    const auto n = static_cast<double>(sample.size());
    double sum = 0.0;
    for (double x : sample) sum += x;
    s.mean = sum / n;
    double sq = 0.0;
    for (double x : sample) sq += (x - s.mean) * (x - s.mean);
    s.std_dev = sample.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
    auto [mn, mx] = std::minmax_element(sample.begin(), sample.end());
    s.min = *mn;
    s.max = *mx;
    s.range = s.max - s.min;
    std::vector<double> sorted(sample);
    std::sort(sorted.begin(), sorted.end());
    s.iqr = detail::quantile_sorted(sorted, 0.75) - detail::quantile_sorted(sorted, 0.25);
    return s;
}

} // namespace likert
