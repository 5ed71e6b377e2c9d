#ifndef TPSHAPE_IO_HPP
#define TPSHAPE_IO_HPP

// Input formats:
//   CSV   one sequence per line, or one matrix row per line; commas separate
//         entries; blank lines and lines starting with '#' are skipped.
//   JSON  {"matrix": [[...]], "u": [...], "v": [...]}, any key optional;
//         entries are integers or strings ("3", "-0.25", "7/4"). JSON
//         floating-point numbers are rejected because they are not exact.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tpshape/errors.hpp"
#include "tpshape/kernel.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"

namespace tpshape::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool looks_like_json(std::string_view text)
{
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
    return false;
}

/// Rows of rationals from CSV text; errors carry 1-based line and column.
inline std::vector<std::vector<Rational>> parse_csv(std::string_view text)
{
    std::vector<std::vector<Rational>> rows;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t first = 0;
        while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
        if (first == line.size() || line[first] == '#') continue;

        std::vector<Rational> row;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            std::string_view cell = line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                      : comma - start);
            try {
                row.push_back(parse_rational(cell));
            } catch (const input_error& e) {
                throw input_error("line " + std::to_string(line_no) + ", column " + std::to_string(start + 1)
                                  + ": " + e.what());
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Rational rational_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const input_error& e) {
            throw input_error(where + ": " + e.what());
        }
    }
    if (j.is_number_float())
        throw input_error(where + ": floating-point number " + j.dump()
                          + " is not exact; quote it as a decimal string");
    throw input_error(where + ": expected an integer or a rational string");
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline std::vector<Rational> vector_from_json(const json& j, const std::string& where)
{
    if (!j.is_array()) throw input_error(where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline json seq_to_json(const Seq& u)
{
    json a = json::array();
    for (const auto& x : u) a.push_back(rational_to_json(x));
    return a;
}

inline json kernel_to_json(const Kernel& K)
{
    json rows = json::array();
    for (const auto& r : K.to_rows()) {
        json row = json::array();
        for (const auto& x : r) row.push_back(rational_to_json(x));
        rows.push_back(row);
    }
    return rows;
}

struct Envelope {
    std::optional<Kernel> matrix;
    std::optional<Seq> u, v;
};

inline Envelope parse_envelope(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("JSON input must be an object");
    Envelope env;
    if (j.contains("matrix")) {
        const auto& m = j["matrix"];
        if (!m.is_array() || m.empty()) throw input_error("matrix: expected a nonempty array of rows");
        std::vector<std::vector<Rational>> rows;
        for (std::size_t i = 0; i < m.size(); ++i)
            rows.push_back(vector_from_json(m[i], "matrix[" + std::to_string(i) + "]"));
        env.matrix = Kernel(rows);
    }
    if (j.contains("u")) env.u = Seq(vector_from_json(j["u"], "u"));
    if (j.contains("v")) env.v = Seq(vector_from_json(j["v"], "v"));
    return env;
}

inline Kernel kernel_from_text(std::string_view text)
{
    if (looks_like_json(text)) {
        auto env = parse_envelope(text);
        if (!env.matrix) throw input_error("JSON input has no \"matrix\"");
        return *env.matrix;
    }
    auto rows = parse_csv(text);
    if (rows.empty()) throw input_error("no matrix rows found");
    return Kernel(rows);
}

/// Every sequence in the text: CSV lines, or the "u" (then "v") of an envelope.
inline std::vector<Seq> sequences_from_text(std::string_view text)
{
    std::vector<Seq> out;
    if (looks_like_json(text)) {
        auto env = parse_envelope(text);
        if (env.u) out.push_back(*env.u);
        if (env.v) out.push_back(*env.v);
    } else {
        for (auto& row : parse_csv(text)) out.emplace_back(std::move(row));
    }
    if (out.empty()) throw input_error("no sequence found");
    return out;
}

inline Seq sequence_from_text(std::string_view text)
{
    auto all = sequences_from_text(text);
    if (all.size() != 1) throw input_error("expected exactly one sequence, found " + std::to_string(all.size()));
    return all.front();
}

} // namespace tpshape::io

#endif
