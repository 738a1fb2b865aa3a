#pragma once

#include <cstdio>
#include <string>
#include <string_view>

#include "likert/errors.hpp"

namespace likert {

/// Calendar month, the only time resolution the library deals with.
/// Parsed from and formatted as ISO "YYYY-MM".
struct Month {
    int year = 0;
    int month = 1; // 1..12

    static Month parse(std::string_view s) {
        auto fail = [&] {
            throw ValidationError(Errc::bad_date,
                                  "bad date '" + std::string(s) + "', expected YYYY-MM");
        };
        if (s.size() != 7 || s[4] != '-') fail();
        for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u})
            if (s[i] < '0' || s[i] > '9') fail();
        int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
        int m = (s[5] - '0') * 10 + (s[6] - '0');
        if (m < 1 || m > 12) fail();
        return Month{y, m};
    }

    std::string str() const {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
        return buf;
    }

    int index() const { return year * 12 + (month - 1); }

    static Month from_index(int idx) {
        int y = idx / 12;
        int m = idx % 12;
        if (m < 0) { m += 12; --y; }
        return Month{y, m + 1};
    }

    Month plus(int k) const { return from_index(index() + k); }

    friend bool operator==(Month a, Month b) { return a.index() == b.index(); }
    friend bool operator!=(Month a, Month b) { return !(a == b); }
    friend bool operator<(Month a, Month b) { return a.index() < b.index(); }
    friend bool operator<=(Month a, Month b) { return a.index() <= b.index(); }
    friend bool operator>(Month a, Month b) { return b < a; }
    friend bool operator>=(Month a, Month b) { return b <= a; }
    friend int operator-(Month a, Month b) { return a.index() - b.index(); }
};

} // namespace likert
