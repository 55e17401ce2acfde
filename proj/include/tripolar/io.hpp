#pragma once

// JSON forms of colours and diagnostic reports. Numbers are written with 17
// significant digits so a write/read cycle reproduces every double exactly.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "tripolar/colourspace.hpp"
#include "tripolar/diagnostics.hpp"
#include "tripolar/error.hpp"

namespace tripolar {

inline std::string format_number(double v)
{
    if (v == 0.0)
        v = 0.0; // fold -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline void append_coeff_json(std::string& out, const TriCoeff& t)
{
    out += "{\"q\":";
    out += format_number(t.q());
    out += ",\"eps\":[";
    const auto& s = t.psi().samples();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += format_number(s[i]);
    }
    out += "]}";
}

} // namespace detail

/// {"square":1,"grid":{...},"R":{"q":..,"eps":[..]},"G":{..},"B":{..}}
inline std::string colour_to_json(const Colour& x)
{
    const Grid& g = x.grid();
    std::string out = "{\"square\":" + std::to_string(x.square_index());
    out += ",\"grid\":{\"start\":" + format_number(g.start()) +
           ",\"stop\":" + format_number(g.stop()) + ",\"step\":" + format_number(g.step()) + "}";
    for (Pole p : all_poles) {
        out += ",\"";
        out += pole_name(p);
        out += "\":";
        detail::append_coeff_json(out, x[p]);
    }
    out += '}';
    return out;
}

inline Colour colour_from_json(const std::string& text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedJson, e.what());
    }
    try {
        const auto& jg = doc.at("grid");
        const Grid grid(jg.at("start").get<double>(), jg.at("stop").get<double>(),
                        jg.at("step").get<double>());
        const auto coeff = [&](const char* key) {
            const auto& jc = doc.at(key);
            auto eps = jc.at("eps").get<std::vector<double>>();
            return TriCoeff(jc.at("q").get<double>(), Spectrum(grid, std::move(eps)));
        };
        return Colour(doc.at("square").get<int>(), coeff("R"), coeff("G"), coeff("B"));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedJson, e.what());
    }
}

inline std::string hsb_to_json(const HsbReport& r)
{
    return "{\"hue_nm\":" + format_number(r.hue_nm) + ",\"energy\":" + format_number(r.energy) +
           ",\"peak\":" + format_number(r.peak) + ",\"saturation\":" + format_number(r.saturation) +
           ",\"swatch\":\"" + r.swatch + "\"}";
}

/// Compact human-readable form; epsilon parts are summarised by their peak
/// magnitude rather than listed.
inline std::string colour_to_pretty(const Colour& x, double tol = default_tolerance)
{
    std::string out;
    for (Pole p : all_poles) {
        if (!out.empty())
            out += " + ";
        out += pole_name(p);
        out += '[';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", x[p].q() == 0.0 ? 0.0 : x[p].q());
        out += buf;
        const double e = max_abs(x[p].psi());
        if (e > tol) {
            std::snprintf(buf, sizeof buf, " + eps{max|.|=%.6g}", e);
            out += buf;
        }
        out += ']';
    }
    return out;
}

} // namespace tripolar
