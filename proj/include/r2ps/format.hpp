#pragma once

#include <cstdio>
#include <string>

#include "errors.hpp"

namespace r2ps {

/// Fixed-point rendering with `precision` fractional digits, round-half-even.
inline std::string format_fixed(double value, int precision) {
    if (precision < 1 || precision > 17)
        throw ValidationError("precision must be in 1..17");
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
    return buffer;
}

/// Short scientific rendering used for deviations in reports.
inline std::string format_scientific(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2e", value);
    return buffer;
}

} // namespace r2ps
