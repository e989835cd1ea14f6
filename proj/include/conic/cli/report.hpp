#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "conic/extended_real.hpp"
#include "conic/norm.hpp"
#include "conic/rational.hpp"
#include "conic/version.hpp"

namespace conic::cli {

using Json = nlohmann::ordered_json;

struct Options
{
    std::uint64_t seed = 1;
    NormTag norm = NormTag::linf();
    std::size_t truncation = 64;
    bool verbose = false;
};

struct Report
{
    std::string task;
    std::string source; // file path or example name
    Json results = Json::object();
    bool exact = true;      // every number is an exact rational
    bool heuristic = false; // some verdict rests on a truncated family
    Options options;
    std::vector<std::string> failures; // analysis-level failures; nonempty means exit code 1
};

inline Json q(const Rational& x) { return to_fraction_string(x); }

inline Json q(const RVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_fraction_string(x));
    return a;
}

inline Json q(const std::vector<RVector>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs)
        a.push_back(q(v));
    return a;
}

inline Json q(const ExtendedReal& x) { return x.is_infinite() ? Json("+inf") : q(*x.value); }

template <class T>
Json q(const std::optional<T>& x)
{
    return x ? q(*x) : Json(nullptr);
}

inline Json to_json(const Report& r)
{
    Json j;
    j["task"] = r.task;
    j["source"] = r.source;
    j["status"] = r.failures.empty() ? "ok" : "failed";
    if (!r.failures.empty())
        j["failures"] = r.failures;
    j["results"] = r.results;
    Json p;
    p["seed"] = r.options.seed;
    p["version"] = version;
    p["exact"] = r.exact;
    p["heuristic"] = r.heuristic;
    p["norm"] = to_string(r.options.norm.kind);
    p["truncation"] = r.options.truncation;
    j["provenance"] = std::move(p);
    return j;
}

inline std::string render_machine(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace detail {

// "p/1" prints as "p"; the value is unchanged.
inline std::string scalar_text(const Json& v)
{
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0
            && s.find_first_not_of("-0123456789") == s.size() - 2)
            s.resize(s.size() - 2);
        return s;
    }
    if (v.is_null())
        return "-";
    return v.dump();
}

// A vector of rationals prints inline as (a, b, c).
inline bool is_vector(const Json& v)
{
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

inline std::string inline_text(const Json& v)
{
    if (v.is_primitive())
        return scalar_text(v);
    if (is_vector(v)) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + scalar_text(v[i]);
        return s + ")";
    }
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? " " : "") + inline_text(v[i]);
        return s + "]";
    }
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
        s += (first ? "" : ", ") + k + ": " + inline_text(x);
        first = false;
    }
    return s + "}";
}

// Array of objects sharing the same keys whose values are not nested objects.
inline bool is_table(const Json& v)
{
    if (!v.is_array() || v.empty() || !v[0].is_object())
        return false;
    std::vector<std::string> keys;
    for (const auto& [k, _] : v[0].items())
        keys.push_back(k);
    for (const auto& row : v) {
        if (!row.is_object() || row.size() != keys.size())
            return false;
        std::size_t i = 0;
        for (const auto& [k, x] : row.items())
            if (k != keys[i++] || x.is_object() || (x.is_array() && !is_vector(x) && !x.empty() && !x[0].is_array()))
                return false;
    }
    return true;
}

inline void render_table(std::ostringstream& os, const Json& rows, const std::string& pad)
{
    std::vector<std::string> header;
    for (const auto& [k, _] : rows[0].items())
        header.push_back(k);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
        width[c] = header[c].size();
    for (const auto& row : rows) {
        std::vector<std::string> line;
        std::size_t c = 0;
        for (const auto& [_, x] : row.items()) {
            line.push_back(inline_text(x));
            width[c] = std::max(width[c], line.back().size());
            ++c;
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s = pad;
        for (std::size_t c = 0; c < line.size(); ++c) {
            s += line[c];
            if (c + 1 < line.size())
                s += std::string(width[c] - line[c].size() + 2, ' ');
        }
        os << s << "\n";
    };
    emit(header);
    for (const auto& line : cells)
        emit(line);
}

inline void render_object(std::ostringstream& os, const Json& obj, const std::string& pad)
{
    std::size_t w = 0;
    for (const auto& [k, v] : obj.items())
        if (v.is_primitive() || is_vector(v))
            w = std::max(w, k.size());
    for (const auto& [k, v] : obj.items()) {
        if (v.is_primitive() || is_vector(v)) {
            os << pad << k << std::string(w - k.size() + 2, ' ') << inline_text(v) << "\n";
        } else if (v.is_object()) {
            os << pad << k << "\n";
            render_object(os, v, pad + "  ");
        } else if (is_table(v)) {
            os << pad << k << "\n";
            render_table(os, v, pad + "  ");
        } else {
            os << pad << k << "\n";
            for (const auto& x : v) {
                if (x.is_object()) {
                    render_object(os, x, pad + "  ");
                    os << "\n";
                } else {
                    os << pad << "  " << inline_text(x) << "\n";
                }
            }
        }
    }
}

} // namespace detail

/// Aligned key/value lines and tables over the same tree as the machine output.
inline std::string render_text(const Report& r)
{
    std::ostringstream os;
    detail::render_object(os, to_json(r), "");
    return os.str();
}

} // namespace conic::cli
