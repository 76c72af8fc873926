#pragma once

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "memwalk/analysis.hpp"
#include "memwalk/state.hpp"

namespace memwalk {

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace detail

/// CSV form: header + one row per position, floats to 12 significant
/// digits, LF line endings.
inline std::string distribution_to_csv(const Distribution& dist) {
    std::string out = "position,probability\n";
    for (const auto& [k, p] : dist.entries())
        out += std::to_string(k) + "," + detail::fmt_double(p.to_double()) + "\n";
    return out;
}

inline std::map<long long, double> distribution_from_csv(const std::string& csv) {
    std::map<long long, double> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("csv: missing comma");
        out[std::stoll(line.substr(0, comma))] = std::stod(line.substr(comma + 1));
    }
    return out;
}

/// JSON form carries the exact rationals as "num/den" strings plus float
/// views, under a versioned schema.
inline nlohmann::json distribution_to_json(const Distribution& dist, int steps) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [k, p] : dist.entries())
        rows.push_back({{"position", k}, {"probability", p.to_string()},
                        {"value", p.to_double()}});
    return {{"schema", 1}, {"steps", steps}, {"positions", rows}};
}

inline Distribution distribution_from_json(const nlohmann::json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw std::invalid_argument("json: unsupported schema");
    Distribution d;
    for (const auto& row : j["positions"]) {
        std::string frac = row["probability"].get<std::string>();
        auto slash = frac.find('/');
        long long num = std::stoll(frac.substr(0, slash));
        long long den = slash == std::string::npos ? 1 : std::stoll(frac.substr(slash + 1));
        int exp = 0;
        while ((1LL << exp) < den) ++exp;
        if ((1LL << exp) != den) throw std::invalid_argument("json: non-dyadic probability");
        d.add(row["position"].get<long long>(), Dyadic(num, exp));
    }
    return d;
}

/// Figure-style table: position, p_classical, p_quantum, p_memory, with
/// every position in the support range emitted (zeros included) so
/// plotting tools need no join logic.
inline std::string comparison_to_csv(const WalkComparison& cmp) {
    std::string out = "position,p_classical,p_quantum,p_memory\n";
    for (long long k = -cmp.steps; k <= cmp.steps; ++k) {
        out += std::to_string(k) + "," +
               detail::fmt_double(cmp.classical.probability(k).to_double()) + "," +
               detail::fmt_double(cmp.quantum.probability(k).to_double()) + "," +
               detail::fmt_double(cmp.memory.probability(k).to_double()) + "\n";
    }
    return out;
}

}  // namespace memwalk
