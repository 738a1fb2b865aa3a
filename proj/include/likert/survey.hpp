#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "likert/errors.hpp"

namespace likert {

/// One period's response shares over N ordered categories, in percent.
/// Instances always hold non-negative shares summing to 100 (up to floating
/// round-off); the only way to build one is through the validating factories
/// below, so downstream code can rely on the invariant.
class SurveyDistribution {
public:
    /// Normalizes non-negative weights to percentages summing to 100.
    /// No tolerance check: any positive total is accepted.
    static SurveyDistribution from_weights(std::vector<double> weights) {
        if (weights.empty())
            throw ValidationError(Errc::empty_input, "empty share vector");
        double sum = 0.0;
        for (double w : weights) {
            if (w < 0.0)
                throw ValidationError(Errc::negative_share,
                                      "negative share " + std::to_string(w));
            sum += w;
        }
        if (sum <= 0.0)
            throw ValidationError(Errc::sum_out_of_tolerance,
                                  "shares sum to zero, cannot normalize");
        double scale = 100.0 / sum;
        for (double& w : weights) w *= scale;
        return SurveyDistribution(std::move(weights));
    }

    std::size_t n_categories() const { return shares_.size(); }
    const std::vector<double>& shares() const { return shares_; }
    double share(std::size_t i) const { return shares_[i]; }

private:
    explicit SurveyDistribution(std::vector<double> shares) : shares_(std::move(shares)) {}
    std::vector<double> shares_;
};

/// Validates raw percentages: non-negative, total within `sum_tolerance` of
/// 100. Accepted rows are rescaled multiplicatively so the total is exactly
/// 100 (published survey shares are rounded, so totals drift a few tenths).
inline SurveyDistribution validate_distribution(const std::vector<double>& raw_shares,
                                                double sum_tolerance = 0.5) {
    if (raw_shares.empty())
        throw ValidationError(Errc::empty_input, "empty share vector");
    for (double s : raw_shares) {
        if (s < 0.0)
            throw ValidationError(Errc::negative_share,
                                  "negative share " + std::to_string(s));
    }
    double sum = std::accumulate(raw_shares.begin(), raw_shares.end(), 0.0);
    if (std::abs(sum - 100.0) > sum_tolerance)
        throw ValidationError(Errc::sum_out_of_tolerance,
                              "shares sum to " + std::to_string(sum) +
                                  ", outside 100 +/- " + std::to_string(sum_tolerance));
    return SurveyDistribution::from_weights(raw_shares);
}

/// Five-option reply shares plus the "do not know" remainder, in percent.
struct FiveCategoryShares {
    double pp = 0; // sharp increase
    double p = 0;  // slight increase
    double e = 0;  // no change
    double m = 0;  // slight fall
    double mm = 0; // sharp fall
    double dk = 0; // do not know
};

/// Checks field signs and the six-way total against the tolerance window.
inline FiveCategoryShares validate_five(const FiveCategoryShares& five,
                                        double sum_tolerance = 0.5) {
    for (double s : {five.pp, five.p, five.e, five.m, five.mm, five.dk}) {
        if (s < 0.0)
            throw ValidationError(Errc::negative_share,
                                  "negative share " + std::to_string(s));
    }
    double sum = five.pp + five.p + five.e + five.m + five.mm + five.dk;
    if (std::abs(sum - 100.0) > sum_tolerance)
        throw ValidationError(Errc::sum_out_of_tolerance,
                              "five-option shares sum to " + std::to_string(sum) +
                                  ", outside 100 +/- " + std::to_string(sum_tolerance));
    return five;
}

/// Collapses five options to three: increases together, falls together, and
/// the "do not know" share folded into the neutral category.
/// Order of the result: (increase, no change, fall).
inline SurveyDistribution group_five_to_three(const FiveCategoryShares& five) {
    return SurveyDistribution::from_weights(
        {five.pp + five.p, five.e + five.dk, five.mm + five.m});
}

/// The five substantive shares with the "do not know" mass dropped and the
/// rest renormalized to 100. Order: (pp, p, e, m, mm).
inline SurveyDistribution five_option_distribution(const FiveCategoryShares& five) {
    return SurveyDistribution::from_weights({five.pp, five.p, five.e, five.m, five.mm});
}

} // namespace likert
