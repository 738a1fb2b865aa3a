#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "likert/errors.hpp"
#include "likert/month.hpp"
#include "likert/survey.hpp"
#include "likert/time_series.hpp"

namespace likert {

struct SurveyRecord {
    Month date;
    FiveCategoryShares shares;
};

namespace csv_detail {

inline std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

inline std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) cells.push_back(trim(cur));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

inline std::vector<std::vector<std::string>> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError(Errc::io_error, "cannot open '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        rows.push_back(split_line(line));
    }
    if (rows.empty())
        throw ValidationError(Errc::empty_input, "'" + path + "' has no rows");
    return rows;
}

// header cell -> column index, lowercased
inline std::map<std::string, std::size_t> header_map(const std::vector<std::string>& header) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string k = header[i];
        std::transform(k.begin(), k.end(), k.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        m[k] = i;
    }
    return m;
}

inline std::size_t require_column(const std::map<std::string, std::size_t>& hdr,
                                  const std::string& name, const std::string& path) {
    auto it = hdr.find(name);
    if (it == hdr.end())
        throw ValidationError(Errc::missing_column,
                              "'" + path + "' is missing column '" + name + "'");
    return it->second;
}

inline double parse_number(const std::string& cell, std::size_t row) {
    if (cell.empty())
        throw ValidationError(Errc::bad_number,
                              "empty numeric cell at row " + std::to_string(row));
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size())
        throw ValidationError(Errc::bad_number,
                              "bad number '" + cell + "' at row " + std::to_string(row));
    return v;
}

inline std::string cell_at(const std::vector<std::string>& row, std::size_t col,
                           std::size_t row_no) {
    if (col >= row.size())
        throw ValidationError(Errc::bad_number,
                              "row " + std::to_string(row_no) + " has too few cells");
    return row[col];
}

// dates must advance by exactly one month per row
inline void check_continuity(Month prev, Month cur, std::size_t row_no) {
    const int step = cur - prev;
    if (step <= 0)
        throw ValidationError(Errc::bad_date,
                              "dates out of order at row " + std::to_string(row_no) +
                                  " (" + cur.str() + ")");
    if (step > 1)
        throw ValidationError(Errc::gap_in_dates,
                              "gap in dates at row " + std::to_string(row_no) + " (" +
                                  prev.str() + " -> " + cur.str() + ")");
}

} // namespace csv_detail

/// Survey shares file: header `date,pp,p,e,m,mm[,dk]`, one row per month,
/// consecutive months. Each row is validated against the sum tolerance.
inline std::vector<SurveyRecord> parse_survey_csv(const std::string& path,
                                                  double sum_tolerance = 0.5) {
    namespace cd = csv_detail;
    const auto rows = cd::read_table(path);
    const auto hdr = cd::header_map(rows[0]);
    const std::size_t c_date = cd::require_column(hdr, "date", path);
    const std::size_t c_pp = cd::require_column(hdr, "pp", path);
    const std::size_t c_p = cd::require_column(hdr, "p", path);
    const std::size_t c_e = cd::require_column(hdr, "e", path);
    const std::size_t c_m = cd::require_column(hdr, "m", path);
    const std::size_t c_mm = cd::require_column(hdr, "mm", path);
    const auto dk_it = hdr.find("dk");

    std::vector<SurveyRecord> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::size_t row_no = r + 1; // 1-based, header included
        const auto& row = rows[r];
        SurveyRecord rec;
        rec.date = Month::parse(cd::cell_at(row, c_date, row_no));
        FiveCategoryShares f;
        f.pp = cd::parse_number(cd::cell_at(row, c_pp, row_no), row_no);
        f.p = cd::parse_number(cd::cell_at(row, c_p, row_no), row_no);
        f.e = cd::parse_number(cd::cell_at(row, c_e, row_no), row_no);
        f.m = cd::parse_number(cd::cell_at(row, c_m, row_no), row_no);
        f.mm = cd::parse_number(cd::cell_at(row, c_mm, row_no), row_no);
        f.dk = dk_it == hdr.end()
                   ? 0.0
                   : cd::parse_number(cd::cell_at(row, dk_it->second, row_no), row_no);
        try {
            rec.shares = validate_five(f, sum_tolerance);
        } catch (ValidationError& e) {
            throw ValidationError(e.code(),
                                  std::string(e.message()) + " (row " +
                                      std::to_string(row_no) + ")");
        }
        if (!out.empty()) cd::check_continuity(out.back().date, rec.date, row_no);
        out.push_back(rec);
    }
    if (out.empty())
        throw ValidationError(Errc::empty_input, "'" + path + "' has no data rows");
    return out;
}

/// Rate series file: header `date,rate`, strictly positive rates, consecutive
/// months.
inline TimeSeries parse_rates_csv(const std::string& path) {
    namespace cd = csv_detail;
    const auto rows = cd::read_table(path);
    const auto hdr = cd::header_map(rows[0]);
    const std::size_t c_date = cd::require_column(hdr, "date", path);
    const std::size_t c_rate = cd::require_column(hdr, "rate", path);

    std::vector<std::pair<Month, double>> pairs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::size_t row_no = r + 1;
        const Month d = Month::parse(cd::cell_at(rows[r], c_date, row_no));
        const double v = cd::parse_number(cd::cell_at(rows[r], c_rate, row_no), row_no);
        if (v <= 0.0)
            throw ValidationError(Errc::non_positive_rate,
                                  "non-positive rate " + std::to_string(v) + " at row " +
                                      std::to_string(row_no));
        if (!pairs.empty()) cd::check_continuity(pairs.back().first, d, row_no);
        pairs.emplace_back(d, v);
    }
    if (pairs.empty())
        throw ValidationError(Errc::empty_input, "'" + path + "' has no data rows");
    return TimeSeries::from_rows(pairs);
}

/// Forecast-error file for the standalone test: header `date,error`.
inline TimeSeries parse_error_csv(const std::string& path) {
    namespace cd = csv_detail;
    const auto rows = cd::read_table(path);
    const auto hdr = cd::header_map(rows[0]);
    const std::size_t c_date = cd::require_column(hdr, "date", path);
    const std::size_t c_err = cd::require_column(hdr, "error", path);

    std::vector<std::pair<Month, double>> pairs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::size_t row_no = r + 1;
        const Month d = Month::parse(cd::cell_at(rows[r], c_date, row_no));
        const double v = cd::parse_number(cd::cell_at(rows[r], c_err, row_no), row_no);
        if (!pairs.empty()) cd::check_continuity(pairs.back().first, d, row_no);
        pairs.emplace_back(d, v);
    }
    if (pairs.empty())
        throw ValidationError(Errc::empty_input, "'" + path + "' has no data rows");
    return TimeSeries::from_rows(pairs);
}

} // namespace likert
