#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "likert/errors.hpp"
#include "likert/ols.hpp"
#include "likert/time_series.hpp"

namespace likert {

/// Akaike information criterion in its least-squares form,
/// n * ln(SSR/n) + 2k, with k counting every estimated mean-equation
/// coefficient (intercept included).
inline double aic(double ssr, int n_obs, int n_params) {
    if (n_params < 1 || n_obs <= n_params)
        throw ComputationError(Errc::too_few_observations,
                               "aic needs n_obs > n_params >= 1");
    if (ssr <= 0.0)
        throw ComputationError(Errc::non_positive_ssr,
                               "non-positive SSR (exact fit)");
    return n_obs * std::log(ssr / n_obs) + 2.0 * n_params;
}

/// When the exogenous proxy enters the mean equation: one period lagged
/// (x_{t-1}, the default; the proxy for the forecast month is never needed)
/// or contemporaneous (x_t, which assumes the survey-based value for a month
/// is observable before that month's rate).
enum class ExogTiming { lagged, contemporaneous };

inline const char* exog_timing_name(ExogTiming t) {
    return t == ExogTiming::lagged ? "lagged" : "contemporaneous";
}

/// Estimated AR(p) / ARX(p) mean equation:
///   y_t = intercept + sum_j phi_j y_{t-j} [+ beta x_{t-1 or t}] + e_t
struct ModelFit {
    int lag_order = 0;
    double intercept = 0;
    std::vector<double> ar_coefficients;
    std::optional<double> exog_coefficient;
    double ssr = 0;
    int n_obs = 0;
    double aic = 0;
    bool exact_fit = false; // SSR ~ 0; treated as minimal AIC
};

struct SelectOptions {
    int max_lag = 12;
    ExogTiming timing = ExogTiming::lagged;
};

namespace detail {

struct ArSample {
    std::vector<std::size_t> rows; // target indices into y, contiguous
    int exog_lag = 0;              // 1 for lagged timing, 0 for contemporaneous
};

// Rows usable by every candidate: targets from max_lag on, restricted to
// dates where the exogenous regressor (if any) is available. Fitting all
// candidate orders on this one sample keeps their AIC values comparable.
inline ArSample common_sample(const TimeSeries& y, const TimeSeries* exog,
                              const SelectOptions& opts) {
    ArSample s;
    s.exog_lag = opts.timing == ExogTiming::lagged ? 1 : 0;
    long lo = opts.max_lag;
    long hi = static_cast<long>(y.size()); // exclusive
    if (exog) {
        if (exog->empty())
            throw ValidationError(Errc::missing_exog, "exogenous series is empty");
        // row t needs the exogenous value dated date(t) - exog_lag
        lo = std::max(lo, (exog->start() - y.start()) + s.exog_lag);
        hi = std::min(hi, (exog->last_date() - y.start()) + s.exog_lag + 1);
    }
    if (lo >= hi)
        throw ValidationError(Errc::too_short,
                              "no estimation rows left after lag/exog alignment");
    for (long t = lo; t < hi; ++t) s.rows.push_back(static_cast<std::size_t>(t));
    return s;
}

inline ModelFit fit_order(const TimeSeries& y, const TimeSeries* exog, int p,
                          const ArSample& sample) {
    const auto n_obs = static_cast<Eigen::Index>(sample.rows.size());
    const Eigen::Index n_cols = 1 + p + (exog ? 1 : 0);
    if (n_obs <= n_cols)
        throw ValidationError(Errc::too_short,
                              "estimation sample too short for lag order " +
                                  std::to_string(p));
    Eigen::MatrixXd X(n_obs, n_cols);
    Eigen::VectorXd yv(n_obs);
    for (Eigen::Index r = 0; r < n_obs; ++r) {
        const std::size_t t = sample.rows[static_cast<std::size_t>(r)];
        yv(r) = y.value(t);
        X(r, 0) = 1.0;
        for (int j = 1; j <= p; ++j) X(r, j) = y.value(t - static_cast<std::size_t>(j));
        if (exog) {
            const Month xd = y.date(t).plus(-sample.exog_lag);
            X(r, n_cols - 1) = exog->at(xd);
        }
    }
    const OlsFit ols = ols_fit_minimum_norm(X, yv);
    ModelFit fit;
    fit.lag_order = p;
    fit.intercept = ols.coefficients(0);
    fit.ar_coefficients.assign(ols.coefficients.data() + 1, ols.coefficients.data() + 1 + p);
    if (exog) fit.exog_coefficient = ols.coefficients(n_cols - 1);
    fit.ssr = ols.ssr;
    fit.n_obs = static_cast<int>(n_obs);
    try {
        fit.aic = aic(fit.ssr, fit.n_obs, static_cast<int>(n_cols));
    } catch (const ComputationError& e) {
        if (e.code() != Errc::non_positive_ssr) throw;
        fit.aic = -std::numeric_limits<double>::infinity();
        fit.exact_fit = true;
    }
    return fit;
}

} // namespace detail

/// Fits AR(p) (or ARX(p) when `exog` is given) for p = 1..max_lag on a
/// common estimation sample and returns the candidate with the lowest AIC;
/// ties go to the smaller order. An exact fit counts as minimal AIC.
inline ModelFit select_and_fit(const TimeSeries& y, const TimeSeries* exog = nullptr,
                               const SelectOptions& opts = {}) {
    if (opts.max_lag < 1)
        throw ValidationError(Errc::bad_window, "max_lag must be >= 1");
    if (y.size() < static_cast<std::size_t>(2 * opts.max_lag + 2))
        throw ValidationError(Errc::too_short,
                              "series of length " + std::to_string(y.size()) +
                                  " too short for lag selection up to " +
                                  std::to_string(opts.max_lag));
    const auto sample = detail::common_sample(y, exog, opts);
    std::optional<ModelFit> best;
    for (int p = 1; p <= opts.max_lag; ++p) {
        ModelFit fit = detail::fit_order(y, exog, p, sample);
        if (!best || fit.aic < best->aic) best = std::move(fit);
    }
    return *best;
}

/// Single fixed-order fit on the same alignment rule (used when re-selecting
/// the order at every forecast origin is disabled).
inline ModelFit fit_fixed_order(const TimeSeries& y, const TimeSeries* exog, int lag_order,
                                const SelectOptions& opts = {}) {
    if (lag_order < 1 || lag_order > opts.max_lag)
        throw ValidationError(Errc::bad_window,
                              "lag order must lie in [1, max_lag]");
    const auto sample = detail::common_sample(y, exog, opts);
    return detail::fit_order(y, exog, lag_order, sample);
}

/// Linear predictor for the month after `history` ends.
inline double one_step_forecast(const ModelFit& fit, const TimeSeries& history,
                                const TimeSeries* exog = nullptr,
                                ExogTiming timing = ExogTiming::lagged) {
    const auto p = static_cast<std::size_t>(fit.lag_order);
    if (history.size() < p)
        throw ValidationError(Errc::history_too_short,
                              "history shorter than lag order " +
                                  std::to_string(fit.lag_order));
    double pred = fit.intercept;
    for (std::size_t j = 1; j <= p; ++j)
        pred += fit.ar_coefficients[j - 1] * history.value(history.size() - j);
    if (fit.exog_coefficient) {
        const Month target = history.last_date().plus(1);
        const Month xd = timing == ExogTiming::lagged ? target.plus(-1) : target;
        if (!exog || !exog->contains(xd))
            throw ValidationError(Errc::missing_exog,
                                  "exogenous value for " + xd.str() + " unavailable");
        pred += *fit.exog_coefficient * exog->at(xd);
    }
    return pred;
}

} // namespace likert
