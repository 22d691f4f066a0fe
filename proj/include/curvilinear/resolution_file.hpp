#pragma once

/**
 * @file resolution_file.hpp
 * @brief Line-oriented text format for resolution data.
 *
 * See docs/resolution-format.md. One `key = value` per line; `#` starts a
 * comment; each `[divisor]` header opens a new divisor record. Classes use
 * the canonical L-polynomial syntax.
 */

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "curvilinear/error.hpp"
#include "curvilinear/lt_parser.hpp"
#include "curvilinear/resolution.hpp"

namespace curvilinear {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] inline void file_error(int line, const std::string& what) {
    throw Error(ErrorCode::InvalidResolutionFile, "line " + std::to_string(line) + ": " + what);
}

inline int parse_int(const std::string& value, int line, const std::string& key) {
    int out = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) file_error(line, key + " must be an integer, got '" + value + "'");
    return out;
}

inline LaurentPoly parse_class(const std::string& value, int line, const std::string& key) {
    try {
        return parse_laurent(value);
    } catch (const Error& e) {
        file_error(line, key + ": " + e.what());
    }
}

} // namespace detail

inline ResolutionData read_resolution_file(std::istream& in) {
    using detail::file_error;
    ResolutionData res;
    res.ambient_dim = 0;
    Divisor* current = nullptr;
    std::map<int, int> first_line_of_id;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) continue;
        if (text == "[divisor]") {
            res.divisors.emplace_back();
            current = &res.divisors.back();
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) file_error(line, "expected 'key = value' or '[divisor]'");
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string value = detail::trim(text.substr(eq + 1));

        if (current == nullptr) {
            if (key == "ambient_dim") {
                res.ambient_dim = detail::parse_int(value, line, key);
            } else if (key == "origin_mult") {
                res.origin_mult = detail::parse_int(value, line, key);
                if (*res.origin_mult < 1) file_error(line, "origin_mult must be positive");
            } else if (key == "h2") {
                res.h2 = detail::parse_class(value, line, key);
            } else {
                file_error(line, "unknown header key '" + key + "'");
            }
            continue;
        }

        Divisor& d = *current;
        if (key == "id") {
            d.id = detail::parse_int(value, line, key);
            if (d.id < 1) file_error(line, "id must be positive");
            if (!first_line_of_id.emplace(d.id, line).second) file_error(line, "duplicate id " + value);
        } else if (key == "N" || key == "nu" || key == "m") {
            const int v = detail::parse_int(value, line, key);
            if (v < 1) file_error(line, key + " must be a positive integer");
            (key == "N" ? d.N : key == "nu" ? d.nu : d.m) = v;
        } else if (key == "strict_meets") {
            d.strict_meets = detail::parse_int(value, line, key);
            if (*d.strict_meets < 0) file_error(line, "strict_meets must be non-negative");
        } else if (key == "class_open") {
            d.class_open = detail::parse_class(value, line, key);
        } else if (key == "class_strict") {
            d.class_strict = detail::parse_class(value, line, key);
        } else if (key == "neighbors") {
            std::string list = value;
            std::replace(list.begin(), list.end(), ',', ' ');
            std::istringstream items(list);
            std::string item;
            while (items >> item) d.neighbors.push_back(detail::parse_int(item, line, key));
            std::sort(d.neighbors.begin(), d.neighbors.end());
        } else {
            file_error(line, "unknown divisor key '" + key + "'");
        }
    }

    if (res.ambient_dim < 2) file_error(line, "ambient_dim missing or below 2");
    std::set<int> ids;
    for (const auto& d : res.divisors) {
        if (d.id == 0) file_error(line, "a divisor record has no id");
        if (d.N == 0 || d.nu == 0 || d.m == 0) {
            file_error(first_line_of_id[d.id], "divisor " + std::to_string(d.id) + " needs N, nu and m");
        }
        ids.insert(d.id);
    }
    for (const auto& d : res.divisors) {
        for (int n : d.neighbors) {
            if (n == d.id) file_error(first_line_of_id[d.id], "divisor " + std::to_string(d.id) + " neighbors itself");
            if (!ids.count(n)) file_error(first_line_of_id[d.id], "unknown neighbor " + std::to_string(n));
            const auto& other = res.divisor(n).neighbors;
            if (!std::binary_search(other.begin(), other.end(), d.id)) {
                file_error(first_line_of_id[d.id], "neighbors not symmetric between " + std::to_string(d.id) +
                                                       " and " + std::to_string(n));
            }
        }
    }
    return res;
}

inline ResolutionData read_resolution_text(const std::string& text) {
    std::istringstream in(text);
    return read_resolution_file(in);
}

/// Writes every field, including classes computed from the counts.
inline void write_resolution_file(std::ostream& out, const ResolutionData& res) {
    out << "# curvilinear resolution data\n";
    out << "ambient_dim = " << res.ambient_dim << '\n';
    if (res.origin_mult) out << "origin_mult = " << *res.origin_mult << '\n';
    if (res.h2) out << "h2 = " << to_string(*res.h2) << '\n';
    for (const auto& d : res.divisors) {
        out << "\n[divisor]\n";
        out << "id = " << d.id << '\n';
        out << "N = " << d.N << '\n';
        out << "nu = " << d.nu << '\n';
        out << "m = " << d.m << '\n';
        out << "neighbors =";
        for (std::size_t i = 0; i < d.neighbors.size(); ++i) out << (i == 0 ? " " : ", ") << d.neighbors[i];
        out << '\n';
        if (d.strict_meets) out << "strict_meets = " << *d.strict_meets << '\n';
        if (d.class_open || (res.ambient_dim == 2 && d.strict_meets)) {
            const LaurentPoly open = class_open(res, d.id);
            out << "class_open = " << to_string(open) << '\n';
        }
        if (d.class_strict || d.strict_meets) {
            const LaurentPoly strict = class_strict(res, d.id);
            out << "class_strict = " << to_string(strict) << '\n';
        }
    }
}

inline std::string resolution_file_text(const ResolutionData& res) {
    std::ostringstream out;
    write_resolution_file(out, res);
    return out.str();
}

} // namespace curvilinear
