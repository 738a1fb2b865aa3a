#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "likert/backtest.hpp"
#include "likert/consensus.hpp"
#include "likert/csv.hpp"
#include "likert/dm.hpp"
#include "likert/errors.hpp"
#include "likert/proxy.hpp"
#include "likert/survey.hpp"
#include "likert/time_series.hpp"
#include "likert/version.hpp"

namespace likert {

/// Every tunable of the survey-to-backtest pipeline, with its default.
struct RunConfig {
    int smoothing_window = 3;
    int scaling_window = 24;
    int max_lag = 12;
    int horizon = 12;
    /// Newey-West truncation lag for the DM tests; unset means
    /// floor(horizon^(1/3)).
    std::optional<int> dm_bandwidth;
    ExogTiming exog_timing = ExogTiming::lagged;
    std::uint64_t seed = 42;
    double sum_tolerance = 0.5;
    bool reselect_lags = true;

    bool operator==(const RunConfig&) const = default;
};

/// Grouped monthly shares plus both consensus values, kept for plot output.
struct SharesRow {
    Month date;
    double increase = 0;
    double no_change = 0;
    double fall = 0;
    double c3 = 0;
    double c5 = 0;

    bool operator==(const SharesRow&) const = default;
};

struct DmComparison {
    std::string benchmark;
    std::string candidate;
    DmResult result;

    bool operator==(const DmComparison&) const = default;
};

struct ReportBundle {
    std::vector<BacktestReport> backtests; // AR, ARX_SC3, ARX_SC5
    std::vector<DmComparison> dm_tests;    // each ARX against the AR benchmark
    TimeSeries c3;
    TimeSeries c5;
    ScaledProxySeries sc3;
    ScaledProxySeries sc5;
    std::vector<SharesRow> shares;
    RunConfig config;
    std::string version = kVersion;
    std::string rng_algorithm = kRngAlgorithm;

    bool operator==(const ReportBundle&) const = default;
};

namespace detail {

template <typename F>
auto pipeline_stage(const char* stage, F&& f) {
    try {
        return f();
    } catch (Error& e) {
        if (e.stage().empty()) e.set_stage(stage);
        throw;
    }
}

} // namespace detail

/// Full run on parsed inputs: consensus extraction, smoothing, scaling, the
/// three backtests, and the DM comparisons. Errors are tagged with the stage
/// that raised them.
inline ReportBundle run_pipeline(const std::vector<SurveyRecord>& survey,
                                 const TimeSeries& rates, const RunConfig& config) {
    ReportBundle bundle;
    bundle.config = config;

    detail::pipeline_stage("consensus", [&] {
        if (survey.empty())
            throw ValidationError(Errc::empty_input, "no survey rows");
        std::vector<std::pair<Month, double>> c3_rows, c5_rows;
        for (const auto& rec : survey) {
            const SurveyDistribution grouped = group_five_to_three(rec.shares);
            const SurveyDistribution five = five_option_distribution(rec.shares);
            SharesRow row;
            row.date = rec.date;
            row.increase = grouped.share(0);
            row.no_change = grouped.share(1);
            row.fall = grouped.share(2);
            row.c3 = consensus(grouped);
            row.c5 = consensus(five);
            bundle.shares.push_back(row);
            c3_rows.emplace_back(rec.date, row.c3);
            c5_rows.emplace_back(rec.date, row.c5);
        }
        bundle.c3 = TimeSeries::from_rows(c3_rows);
        bundle.c5 = TimeSeries::from_rows(c5_rows);
        return 0;
    });

    TimeSeries smooth3, smooth5;
    detail::pipeline_stage("smoothing", [&] {
        smooth3 = moving_average(bundle.c3, config.smoothing_window);
        smooth5 = moving_average(bundle.c5, config.smoothing_window);
        return 0;
    });

    detail::pipeline_stage("scaling", [&] {
        bundle.sc3 = rolling_scale(smooth3, rates, config.scaling_window,
                                   config.smoothing_window);
        bundle.sc5 = rolling_scale(smooth5, rates, config.scaling_window,
                                   config.smoothing_window);
        return 0;
    });

    const BacktestOptions bt{config.horizon, config.max_lag, config.exog_timing,
                             config.reselect_lags};
    detail::pipeline_stage("backtest", [&] {
        bundle.backtests.push_back(iterated_backtest(rates, nullptr, bt, "AR"));
        bundle.backtests.push_back(
            iterated_backtest(rates, &bundle.sc3.series, bt, "ARX_SC3"));
        bundle.backtests.push_back(
            iterated_backtest(rates, &bundle.sc5.series, bt, "ARX_SC5"));
        return 0;
    });

    detail::pipeline_stage("dm", [&] {
        const BacktestReport& ar = bundle.backtests[0];
        auto errors = [](const BacktestReport& r) {
            std::vector<double> e(r.actuals.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = r.actuals.value(i) - r.forecasts.value(i);
            return TimeSeries(r.actuals.start(), std::move(e));
        };
        const TimeSeries ar_err = errors(ar);
        const int bw = config.dm_bandwidth
                           ? *config.dm_bandwidth
                           : default_dm_bandwidth(static_cast<int>(ar_err.size()));
        for (std::size_t i = 1; i < bundle.backtests.size(); ++i) {
            const TimeSeries cand_err = errors(bundle.backtests[i]);
            bundle.dm_tests.push_back(
                {ar.model_name, bundle.backtests[i].model_name,
                 dm_test(ar_err, cand_err, &ar.actuals, bw)});
        }
        return 0;
    });

    return bundle;
}

/// Convenience overload: parse the two CSV files, then run.
inline ReportBundle run_pipeline(const std::string& survey_path,
                                 const std::string& rates_path,
                                 const RunConfig& config) {
    auto survey = detail::pipeline_stage("parse", [&] {
        return parse_survey_csv(survey_path, config.sum_tolerance);
    });
    auto rates =
        detail::pipeline_stage("parse", [&] { return parse_rates_csv(rates_path); });
    return run_pipeline(survey, rates, config);
}

} // namespace likert
