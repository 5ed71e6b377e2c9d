#ifndef TPSHAPE_REPORT_HPP
#define TPSHAPE_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "tpshape/errors.hpp"

namespace tpshape {

/// Output of one CLI command. Exact values are stored as "p/q" strings so
/// the JSON form survives a parse/emit round trip unchanged.
struct Report {
    std::string command;
    nlohmann::json inputs_echo = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> citations;

    friend bool operator==(const Report&, const Report&) = default;
};

inline void to_json(nlohmann::json& j, const Report& r)
{
    j = nlohmann::json{{"command", r.command},
                       {"inputs_echo", r.inputs_echo},
                       {"results", r.results},
                       {"citations", r.citations}};
}

inline void from_json(const nlohmann::json& j, Report& r)
{
    try {
        j.at("command").get_to(r.command);
        r.inputs_echo = j.at("inputs_echo");
        r.results = j.at("results");
        j.at("citations").get_to(r.citations);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed report: ") + e.what());
    }
}

inline std::string emit(const Report& r, int indent = 2) { return nlohmann::json(r).dump(indent); }

inline Report parse_report(const std::string& text)
{
    try {
        return nlohmann::json::parse(text).get<Report>();
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed report JSON: ") + e.what());
    }
}

} // namespace tpshape

#endif
