#pragma once

#include <exception>
#include <string>
#include <utility>

namespace likert {

enum class Errc {
    // input validation
    empty_input,
    negative_share,
    sum_out_of_tolerance,
    dimension_too_small,
    bad_date,
    gap_in_dates,
    missing_column,
    bad_number,
    non_positive_rate,
    date_misalignment,
    bad_window,
    window_too_large,
    insufficient_overlap,
    empty_sample,
    bandwidth_too_large,
    non_positive_actual,
    too_short,
    history_too_short,
    missing_exog,
    // numerical / model failures
    rank_deficient,
    too_few_observations,
    non_positive_ssr,
    degenerate_variance,
    io_error,
};

/// Base error carrying a machine-checkable code and an optional pipeline
/// stage tag. The stage is attached by orchestration code so a failure deep
/// inside a run still tells the user which step broke.
class Error : public std::exception {
public:
    Error(Errc code, std::string message)
        : code_(code), message_(std::move(message)), what_(message_) {}

    Errc code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& stage() const noexcept { return stage_; }

    void set_stage(std::string stage) {
        stage_ = std::move(stage);
        what_ = "[" + stage_ + "] " + message_;
    }

    const char* what() const noexcept override { return what_.c_str(); }

private:
    Errc code_;
    std::string message_;
    std::string stage_;
    std::string what_;
};

/// Malformed or out-of-contract input. CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Failure while computing on valid input (rank deficiency, degenerate
/// variance, I/O on output paths, ...). CLI exit code 2.
class ComputationError : public Error {
public:
    using Error::Error;
};

} // namespace likert
