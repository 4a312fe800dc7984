#pragma once

// JSON forms of diagrams and reports (schema version 1, see README).

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "pillar.hpp"
#include "trace.hpp"

namespace tle {

inline constexpr int json_schema_version = 1;

namespace detail {

inline void check_schema(const nlohmann::json& j, const char* kind) {
    if (!j.is_object()) throw std::invalid_argument(std::string(kind) + " JSON must be an object");
    if (j.value("schema", 0) != json_schema_version)
        throw std::invalid_argument(std::string(kind) + " JSON has unsupported schema version");
}

inline const char* orientation_name(Orientation o) { return o == Orientation::Clockwise ? "clockwise" : "anticlockwise"; }

}  // namespace detail

inline nlohmann::json to_json(const ScaledDiagram& sd) {
    const PillarDiagram& d = sd.diagram;
    nlohmann::json j;
    j["schema"] = json_schema_version;
    j["rank"] = d.rank();
    j["delta_exponent"] = sd.delta_exp;
    j["matching"] = d.matching();
    j["gap_faces"] = d.gap_faces();
    auto orient = d.orientations();
    j["faces"] = nlohmann::json::array();
    for (int f = 0; f < d.face_count(); ++f)
        j["faces"].push_back({{"label", d.label(f)}, {"orientation", detail::orientation_name(orient[detail::at(f)])}});
    j["loops"] = nlohmann::json::array();
    for (std::size_t l = 0; l < d.loops().size(); ++l)
        j["loops"].push_back({{"inner", d.loops()[l].inner},
                              {"outer", d.loops()[l].outer},
                              {"parent", d.loop_parent(static_cast<int>(l))}});
    return j;
}

/// Inverse of to_json. Orientations and loop parents are derived data; when
/// present they must match. Throws std::invalid_argument.
inline ScaledDiagram diagram_from_json(const nlohmann::json& j) {
    detail::check_schema(j, "diagram");
    try {
        std::vector<int> labels;
        std::vector<std::string> orient;
        for (const auto& f : j.at("faces")) {
            labels.push_back(f.at("label").get<int>());
            orient.push_back(f.value("orientation", ""));
        }
        std::vector<DiagramLoop> loops;
        std::vector<std::optional<int>> parents;
        for (const auto& l : j.at("loops")) {
            loops.push_back({l.at("inner").get<int>(), l.at("outer").get<int>()});
            parents.push_back(l.contains("parent") ? std::optional<int>(l["parent"].get<int>()) : std::nullopt);
        }
        PillarDiagram d(j.at("rank").get<int>(), j.at("matching").get<std::vector<int>>(),
                        j.at("gap_faces").get<std::vector<int>>(), std::move(labels), std::move(loops));
        auto derived = d.orientations();
        for (std::size_t f = 0; f < orient.size(); ++f)
            if (!orient[f].empty() && orient[f] != detail::orientation_name(derived[f]))
                throw std::invalid_argument("face " + std::to_string(f) + " orientation disagrees with the diagram");
        for (std::size_t l = 0; l < parents.size(); ++l)
            if (parents[l] && *parents[l] != d.loop_parent(static_cast<int>(l)))
                throw std::invalid_argument("loop " + std::to_string(l) + " parent disagrees with the diagram");
        return {j.value("delta_exponent", 0), std::move(d)};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed diagram JSON: ") + e.what());
    }
}

/// tr(b_w) = delta^delta_exponent, reached via tau(b_w) = delta^k tau(i(A)).
struct TraceReport {
    int rank = 0;
    Word word;  // canonical reduced word of w
    int delta_exponent = 0;
    std::size_t a_value = 0;
    Word reduced_to;  // the commuting set A
    int reduction_exponent = 0;  // k
    bool involution = false;

    friend bool operator==(const TraceReport&, const TraceReport&) = default;
};

inline TraceReport trace_report(TraceEngine& eng, const FCElement& w) {
    const CoxeterGraph& g = eng.graph();
    const auto& red = eng.reduce(w);
    return {g.rank(),
            w.word(),
            eng.tr_exponent(w).exponent,
            a_value(g, w),
            red.a.vertices(),
            red.delta_exp,
            inverse(g, w) == w};
}

inline nlohmann::json to_json(const TraceReport& r) {
    return {{"schema", json_schema_version},   {"rank", r.rank},
            {"word", r.word},                  {"delta_exponent", r.delta_exponent},
            {"a_value", r.a_value},            {"reduced_to", r.reduced_to},
            {"reduction_exponent", r.reduction_exponent}, {"involution", r.involution}};
}

inline TraceReport trace_report_from_json(const nlohmann::json& j) {
    detail::check_schema(j, "trace report");
    try {
        TraceReport r;
        r.rank = j.at("rank").get<int>();
        r.word = j.at("word").get<Word>();
        r.delta_exponent = j.at("delta_exponent").get<int>();
        r.a_value = j.at("a_value").get<std::size_t>();
        r.reduced_to = j.at("reduced_to").get<Word>();
        r.reduction_exponent = j.at("reduction_exponent").get<int>();
        r.involution = j.at("involution").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed trace report JSON: ") + e.what());
    }
}

/// mu~(x,y) by one or both routes. trace_exponent is e with tr(b_x b_{y^-1}) = delta^e;
/// delta_exponent and content describe rho(b_x) stacked on rho(b_{y^-1}).
struct MuReport {
    int rank = 0;
    Word x, y;
    int mu = 0;
    std::optional<int> trace_exponent;
    std::optional<int> delta_exponent;
    std::optional<int> content;

    friend bool operator==(const MuReport&, const MuReport&) = default;
};

inline nlohmann::json to_json(const MuReport& r) {
    nlohmann::json j{{"schema", json_schema_version}, {"rank", r.rank}, {"x", r.x}, {"y", r.y}, {"mu", r.mu}};
    auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    j["trace_exponent"] = opt(r.trace_exponent);
    j["delta_exponent"] = opt(r.delta_exponent);
    j["content"] = opt(r.content);
    return j;
}

inline MuReport mu_report_from_json(const nlohmann::json& j) {
    detail::check_schema(j, "mu report");
    try {
        auto opt = [&](const char* k) {
            return j.contains(k) && !j[k].is_null() ? std::optional<int>(j[k].get<int>()) : std::nullopt;
        };
        return {j.at("rank").get<int>(), j.at("x").get<Word>(),   j.at("y").get<Word>(), j.at("mu").get<int>(),
                opt("trace_exponent"),   opt("delta_exponent"), opt("content")};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed mu report JSON: ") + e.what());
    }
}

}  // namespace tle
