#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <system_error>

#include "pfca/error.hpp"

namespace pfca {

/// Shortest decimal text that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

/// Fixed-point rendering with `precision` digits, ties to even.
inline std::string format_fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return std::string(buf);
}

/// Strict locale-independent double parser. `what` names the value in errors.
inline double parse_double(std::string_view text, std::string_view what) {
    // from_chars rejects leading whitespace and '+'; trim spaces only.
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos)
        throw ParseError("empty number for " + std::string(what));
    text = text.substr(b, e - b + 1);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("unreadable number '" + std::string(text) + "' for " + std::string(what));
    return out;
}

} // namespace pfca
