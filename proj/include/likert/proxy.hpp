#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "likert/errors.hpp"
#include "likert/ols.hpp"
#include "likert/time_series.hpp"

namespace likert {

/// Consensus series mapped into the units of the target rate. Every value at
/// date t is built only from information dated t or earlier.
struct ScaledProxySeries {
    TimeSeries series;
    int smoothing_window = 0;
    int scaling_window = 0;
    /// Dates whose scaling window had a constant consensus; those values fell
    /// back to the window mean of the target (intercept-only regression).
    std::vector<Month> degenerate_windows;

    bool operator==(const ScaledProxySeries&) const = default;
};

/// For each date t with a full `window` ending at t, regresses the target on
/// (intercept, smoothed consensus) over that window and emits the fitted
/// value at t. Dates before the first full window are dropped.
inline ScaledProxySeries rolling_scale(const TimeSeries& smoothed_consensus,
                                       const TimeSeries& target, int window,
                                       int smoothing_window = 0) {
    if (window < 3)
        throw ValidationError(Errc::bad_window, "scaling window must be >= 3");
    const DateOverlap ov = overlap(smoothed_consensus, target);
    if (ov.length < window)
        throw ValidationError(Errc::insufficient_overlap,
                              "need at least " + std::to_string(window) +
                                  " overlapping months, have " + std::to_string(ov.length));

    ScaledProxySeries out;
    out.smoothing_window = smoothing_window;
    out.scaling_window = window;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(ov.length - window + 1));

    Eigen::MatrixXd X(window, 2);
    Eigen::VectorXd yv(window);
    for (int t = window - 1; t < ov.length; ++t) {
        const Month at = ov.start.plus(t);
        double cmin = 0, cmax = 0, tsum = 0;
        for (int k = 0; k < window; ++k) {
            const Month d = ov.start.plus(t - window + 1 + k);
            const double c = smoothed_consensus.at(d);
            const double r = target.at(d);
            X(k, 0) = 1.0;
            X(k, 1) = c;
            yv(k) = r;
            tsum += r;
            if (k == 0) { cmin = cmax = c; }
            cmin = std::min(cmin, c);
            cmax = std::max(cmax, c);
        }
        if (cmax - cmin <= 1e-9) {
            // constant consensus: the slope is unidentified, fall back to the
            // intercept-only fit
            values.push_back(tsum / window);
            out.degenerate_windows.push_back(at);
            continue;
        }
        const OlsFit fit = ols_fit(X, yv);
        values.push_back(fit.coefficients(0) + fit.coefficients(1) * X(window - 1, 1));
    }
    out.series = TimeSeries(ov.start.plus(window - 1), std::move(values));
    return out;
}

} // namespace likert
