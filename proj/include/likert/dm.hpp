#pragma once

#include <cassert>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "likert/errors.hpp"
#include "likert/time_series.hpp"

namespace likert {

/// Newey-West long-run variance of a series with Bartlett weights:
/// g0 + 2 * sum_{j<=bandwidth} (1 - j/(bandwidth+1)) * g_j, where g_j is the
/// 1/n-denominator sample autocovariance.
inline double newey_west_lrv(const std::vector<double>& d, int bandwidth) {
    const auto n = static_cast<int>(d.size());
    if (n < 2)
        throw ValidationError(Errc::too_short, "need at least 2 observations");
    if (bandwidth < 0 || bandwidth >= n)
        throw ValidationError(Errc::bandwidth_too_large,
                              "bandwidth must lie in [0, n)");
    double mean = 0.0;
    for (double x : d) mean += x;
    mean /= n;
    auto gamma = [&](int j) {
        double acc = 0.0;
        for (int t = j; t < n; ++t) acc += (d[t] - mean) * (d[t - j] - mean);
        return acc / n;
    };
    double lrv = gamma(0);
    for (int j = 1; j <= bandwidth; ++j)
        lrv += 2.0 * (1.0 - static_cast<double>(j) / (bandwidth + 1)) * gamma(j);
    // Bartlett weights keep this non-negative; clamp anyway so round-off near
    // zero cannot leak a negative variance.
    assert(lrv > -1e-12);
    return std::max(lrv, 0.0);
}

/// floor(n^(1/3)), the default truncation lag.
inline int default_dm_bandwidth(int n) {
    return static_cast<int>(std::floor(std::cbrt(static_cast<double>(n))));
}

enum class DmLoss { absolute_percentage, absolute, squared };

inline const char* dm_loss_name(DmLoss l) {
    switch (l) {
        case DmLoss::absolute_percentage: return "absolute_percentage";
        case DmLoss::absolute: return "absolute";
        default: return "squared";
    }
}

struct DmResult {
    double statistic = 0;
    double p_value = 1;
    std::string loss_name;
    int bandwidth = 0;
    /// True when the loss differential has zero long-run variance. statistic
    /// is 0 when the mean differential is also 0, +/-infinity otherwise;
    /// either way the number is not a standard-normal draw.
    bool degenerate = false;

    bool operator==(const DmResult&) const = default;
};

/// Diebold-Mariano test of equal forecast accuracy. The loss differential is
/// L(benchmark error) - L(candidate error), so a POSITIVE statistic means the
/// candidate (second) model has the smaller losses. Two-sided p-value against
/// the standard normal.
inline DmResult dm_test(const TimeSeries& errors_benchmark,
                        const TimeSeries& errors_candidate,
                        const TimeSeries* actuals, int bandwidth,
                        DmLoss loss = DmLoss::absolute_percentage) {
    const auto n = errors_benchmark.size();
    if (n < 2)
        throw ValidationError(Errc::too_short, "need at least 2 forecast errors");
    if (errors_candidate.start() != errors_benchmark.start() ||
        errors_candidate.size() != n)
        throw ValidationError(Errc::date_misalignment,
                              "error series cover different dates");
    if (loss == DmLoss::absolute_percentage) {
        if (!actuals)
            throw ValidationError(Errc::missing_column,
                                  "absolute percentage loss needs the actuals series");
        if (actuals->start() != errors_benchmark.start() || actuals->size() != n)
            throw ValidationError(Errc::date_misalignment,
                                  "actuals cover different dates than the errors");
    }

    std::vector<double> d(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double eb = errors_benchmark.value(t);
        const double ec = errors_candidate.value(t);
        switch (loss) {
            case DmLoss::absolute_percentage: {
                const double a = actuals->value(t);
                if (a <= 0.0)
                    throw ValidationError(Errc::non_positive_actual,
                                          "actual at " + actuals->date(t).str() +
                                              " is not positive");
                d[t] = 100.0 * (std::abs(eb) - std::abs(ec)) / a;
                break;
            }
            case DmLoss::absolute:
                d[t] = std::abs(eb) - std::abs(ec);
                break;
            case DmLoss::squared:
                d[t] = eb * eb - ec * ec;
                break;
        }
    }

    double dbar = 0.0;
    for (double x : d) dbar += x;
    dbar /= static_cast<double>(n);

    DmResult res;
    res.loss_name = dm_loss_name(loss);
    res.bandwidth = bandwidth;
    const double lrv = newey_west_lrv(d, bandwidth);
    if (lrv <= 0.0) {
        res.degenerate = true;
        if (dbar == 0.0) {
            res.statistic = 0.0;
            res.p_value = 1.0;
        } else {
            res.statistic = dbar > 0 ? std::numeric_limits<double>::infinity()
                                     : -std::numeric_limits<double>::infinity();
            res.p_value = 0.0;
        }
        return res;
    }
    res.statistic = dbar / std::sqrt(lrv / static_cast<double>(n));
    res.p_value = std::erfc(std::abs(res.statistic) / std::sqrt(2.0));
    return res;
}

} // namespace likert
