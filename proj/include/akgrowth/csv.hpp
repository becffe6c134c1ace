#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "akgrowth/errors.hpp"

namespace akgrowth {

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, std::size_t line = 0) {
    // trim
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ScenarioParseError("not a number: '" + std::string(text) + "'", line);
    return v;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::vector<double> parse_number_list(std::string_view text, std::size_t line = 0) {
    std::vector<double> out;
    if (text.find_first_not_of(" \t\r") == std::string_view::npos) return out;
    for (auto part : split(text, ',')) out.push_back(parse_double(part, line));
    return out;
}

/// Numeric CSV file: one row per line, comma separated, '#' comments allowed.
inline std::vector<std::vector<double>> read_numeric_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioParseError("cannot open data file: " + path);
    std::vector<std::vector<double>> rows;
    std::string linebuf;
    std::size_t lineno = 0;
    while (std::getline(in, linebuf)) {
        ++lineno;
        std::string_view sv(linebuf);
        if (sv.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        if (sv[sv.find_first_not_of(" \t")] == '#') continue;
        rows.push_back(parse_number_list(sv, lineno));
    }
    return rows;
}

}  // namespace akgrowth
