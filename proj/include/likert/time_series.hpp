#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "likert/errors.hpp"
#include "likert/month.hpp"

namespace likert {

/// Monthly series: a start month and consecutive values. Storing the start
/// plus a dense vector makes "strictly increasing, no gaps" true by
/// construction; builders that ingest dated rows check continuity up front.
class TimeSeries {
public:
    TimeSeries() = default;

    TimeSeries(Month start, std::vector<double> values)
        : start_(start), values_(std::move(values)) {}

    static TimeSeries from_rows(const std::vector<std::pair<Month, double>>& rows) {
        if (rows.empty()) return {};
        std::vector<double> values;
        values.reserve(rows.size());
        values.push_back(rows[0].second);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const int step = rows[i].first - rows[i - 1].first;
            if (step <= 0)
                throw ValidationError(Errc::bad_date,
                                      "dates not strictly increasing at row " +
                                          std::to_string(i + 1) + " (" +
                                          rows[i].first.str() + ")");
            if (step > 1)
                throw ValidationError(Errc::gap_in_dates,
                                      "gap in monthly dates at row " +
                                          std::to_string(i + 1) + " (" +
                                          rows[i - 1].first.str() + " -> " +
                                          rows[i].first.str() + ")");
            values.push_back(rows[i].second);
        }
        return TimeSeries(rows[0].first, std::move(values));
    }

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    Month start() const { return start_; }
    Month date(std::size_t i) const { return start_.plus(static_cast<int>(i)); }
    Month last_date() const { return start_.plus(static_cast<int>(values_.size()) - 1); }

    double value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    bool contains(Month m) const {
        return !empty() && start_ <= m && m <= last_date();
    }

    std::optional<std::size_t> index_of(Month m) const {
        if (!contains(m)) return std::nullopt;
        return static_cast<std::size_t>(m - start_);
    }

    double at(Month m) const {
        auto idx = index_of(m);
        if (!idx)
            throw ValidationError(Errc::date_misalignment,
                                  "series has no value for " + m.str());
        return values_[*idx];
    }

    /// Prefix through `last` inclusive; empty if `last` precedes the series.
    TimeSeries up_to(Month last) const {
        if (empty() || last < start_) return {};
        const auto count =
            std::min<std::size_t>(values_.size(), static_cast<std::size_t>(last - start_) + 1);
        return TimeSeries(start_, std::vector<double>(values_.begin(),
                                                      values_.begin() + count));
    }

    TimeSeries strictly_before(Month m) const { return up_to(m.plus(-1)); }

    bool operator==(const TimeSeries&) const = default;

private:
    Month start_;
    std::vector<double> values_;
};

/// Trailing mean over the current and previous window-1 values. The first
/// window-1 dates carry no value and are dropped, so output index 0 sits at
/// the window-th input date.
inline TimeSeries moving_average(const TimeSeries& series, int window) {
    if (window < 1)
        throw ValidationError(Errc::bad_window, "window must be >= 1");
    if (static_cast<std::size_t>(window) > series.size())
        throw ValidationError(Errc::window_too_large,
                              "window " + std::to_string(window) + " exceeds series length " +
                                  std::to_string(series.size()));
    std::vector<double> out;
    out.reserve(series.size() - static_cast<std::size_t>(window) + 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        acc += series.value(i);
        if (i + 1 >= static_cast<std::size_t>(window)) {
            out.push_back(acc / window);
            acc -= series.value(i + 1 - static_cast<std::size_t>(window));
        }
    }
    return TimeSeries(series.start().plus(window - 1), std::move(out));
}

/// Common date range of two series (empty length when disjoint).
struct DateOverlap {
    Month start;
    int length = 0;
};

inline DateOverlap overlap(const TimeSeries& a, const TimeSeries& b) {
    if (a.empty() || b.empty()) return {};
    const Month s = a.start() > b.start() ? a.start() : b.start();
    const Month e = a.last_date() < b.last_date() ? a.last_date() : b.last_date();
    if (e < s) return {};
    return {s, e - s + 1};
}

} // namespace likert
