#ifndef FDKNOT_TRACE_JSON_HPP
#define FDKNOT_TRACE_JSON_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fdknot/gauss_code.hpp"
#include "fdknot/moves.hpp"

namespace fdknot {

/// Trace file format: {"start": gauss_code, "moves": [{kind, position,
/// chords, ...}]}. Insert records carry their extra fields; read_trace
/// accepts exactly what write_trace emits.
inline nlohmann::json trace_to_json(const MoveTrace& trace) {
    nlohmann::json moves = nlohmann::json::array();
    for (const MoveRecord& r : trace.records) {
        nlohmann::json m = {{"kind", std::string(to_string(r.kind))},
                            {"position", r.position},
                            {"chords", r.chords}};
        if (r.kind == MoveKind::R1Insert) {
            m["sign"] = std::string(1, sign_symbol(r.sign));
            m["head_first"] = r.head_first;
        } else if (r.kind == MoveKind::R2Insert) {
            m["position2"] = r.position2;
            m["sign"] = std::string(1, sign_symbol(r.sign));
            m["nested"] = r.nested;
        }
        moves.push_back(std::move(m));
    }
    return {{"start", serialize(trace.start)}, {"moves", std::move(moves)}};
}

inline MoveTrace trace_from_json(const nlohmann::json& j) {
    MoveTrace trace;
    trace.start = parse_gauss_code(j.at("start").get<std::string>());
    for (const nlohmann::json& m : j.at("moves")) {
        MoveRecord r;
        const std::string kind_name = m.at("kind").get<std::string>();
        const auto kind = move_kind_from(kind_name);
        if (!kind) throw std::invalid_argument("unknown move kind '" + kind_name + "'");
        r.kind = *kind;
        r.position = m.at("position").get<std::size_t>();
        r.chords = m.at("chords").get<std::vector<int>>();
        if (r.kind == MoveKind::R1Insert || r.kind == MoveKind::R2Insert) {
            const std::string sign = m.at("sign").get<std::string>();
            if (sign != "+" && sign != "-") throw std::invalid_argument("bad sign '" + sign + "'");
            r.sign = sign == "+" ? ChordSign::Plus : ChordSign::Minus;
        }
        if (r.kind == MoveKind::R1Insert) r.head_first = m.at("head_first").get<bool>();
        if (r.kind == MoveKind::R2Insert) {
            r.position2 = m.at("position2").get<std::size_t>();
            r.nested = m.at("nested").get<bool>();
        }
        trace.records.push_back(std::move(r));
    }
    return trace;
}

inline void write_trace(const MoveTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << trace_to_json(trace).dump(2) << '\n';
}

inline MoveTrace read_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return trace_from_json(nlohmann::json::parse(in));
}

} // namespace fdknot

#endif
