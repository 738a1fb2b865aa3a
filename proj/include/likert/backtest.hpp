#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "likert/ar.hpp"
#include "likert/errors.hpp"
#include "likert/time_series.hpp"

namespace likert {

/// Mean absolute percentage forecast error over aligned series, in percent.
inline double mapfe(const TimeSeries& actuals, const TimeSeries& forecasts) {
    if (actuals.empty() || forecasts.empty())
        throw ValidationError(Errc::empty_sample, "empty forecast evaluation");
    if (actuals.start() != forecasts.start() || actuals.size() != forecasts.size())
        throw ValidationError(Errc::date_misalignment,
                              "actuals and forecasts cover different dates");
    double acc = 0.0;
    for (std::size_t i = 0; i < actuals.size(); ++i) {
        if (actuals.value(i) <= 0.0)
            throw ValidationError(Errc::non_positive_actual,
                                  "actual at " + actuals.date(i).str() +
                                      " is not positive; percentage error undefined");
        acc += std::abs(actuals.value(i) - forecasts.value(i)) / actuals.value(i);
    }
    return 100.0 * acc / static_cast<double>(actuals.size());
}

struct BacktestReport {
    std::string model_name;
    TimeSeries forecasts;
    TimeSeries actuals;
    double mapfe = 0;
    std::vector<int> lag_orders; // selected order at each forecast origin

    bool operator==(const BacktestReport&) const = default;
};

struct BacktestOptions {
    int horizon = 12;
    int max_lag = 12;
    ExogTiming timing = ExogTiming::lagged;
    /// Re-select the lag order at every origin (default). When false the
    /// order chosen at the first origin is re-estimated but kept fixed.
    bool reselect_lags = true;
};

/// Iterated one-step-ahead backtest over the last `horizon` months of `y`.
/// For each forecast month the model is re-estimated on the expanding window
/// of strictly earlier data, with the exogenous series truncated to what
/// would have been observable at that time.
inline BacktestReport iterated_backtest(const TimeSeries& y, const TimeSeries* exog,
                                        const BacktestOptions& opts = {},
                                        std::string model_name = "AR") {
    if (opts.horizon < 1)
        throw ValidationError(Errc::bad_window, "horizon must be >= 1");
    if (y.size() < static_cast<std::size_t>(opts.horizon + 2 * opts.max_lag + 2))
        throw ValidationError(Errc::too_short,
                              "series of length " + std::to_string(y.size()) +
                                  " too short for a horizon-" + std::to_string(opts.horizon) +
                                  " backtest with max_lag " + std::to_string(opts.max_lag));

    const SelectOptions sel{opts.max_lag, opts.timing};
    BacktestReport report;
    report.model_name = std::move(model_name);
    std::vector<double> forecasts, actuals;
    std::optional<int> fixed_order;

    const std::size_t first = y.size() - static_cast<std::size_t>(opts.horizon);
    for (std::size_t i = first; i < y.size(); ++i) {
        const Month target = y.date(i);
        const TimeSeries history = y.strictly_before(target);
        TimeSeries exog_hist;
        const TimeSeries* exog_ptr = nullptr;
        if (exog) {
            const Month avail =
                opts.timing == ExogTiming::lagged ? target.plus(-1) : target;
            exog_hist = exog->up_to(avail);
            exog_ptr = &exog_hist;
        }
        ModelFit fit;
        if (opts.reselect_lags || !fixed_order) {
            fit = select_and_fit(history, exog_ptr, sel);
            if (!opts.reselect_lags) fixed_order = fit.lag_order;
        } else {
            fit = fit_fixed_order(history, exog_ptr, *fixed_order, sel);
        }
        forecasts.push_back(one_step_forecast(fit, history, exog_ptr, opts.timing));
        actuals.push_back(y.value(i));
        report.lag_orders.push_back(fit.lag_order);
    }

    const Month start = y.date(first);
    report.forecasts = TimeSeries(start, std::move(forecasts));
    report.actuals = TimeSeries(start, std::move(actuals));
    report.mapfe = mapfe(report.actuals, report.forecasts);
    return report;
}

} // namespace likert
