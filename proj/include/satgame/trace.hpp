#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "satgame/game.hpp"

namespace satgame {

using json = nlohmann::ordered_json;

// One line per move, preceded by a header line. Field order is fixed so a
// parse/serialize round trip reproduces the file byte for byte.
struct TraceHeader {
    int n = 0;
    Convention convention = Convention::MinimizerFirst;
    std::uint64_t seed = 0;
    std::string minimizer;
    std::string maximizer;
};

struct TraceRow {
    int ply = 0;
    Role role = Role::Minimizer;
    Edge edge{0, 1};
    int edges_after = 0;
    json annotation = json::object();
};

struct Trace {
    TraceHeader header;
    std::vector<TraceRow> rows;
};

inline Convention convention_from_name(const std::string& s) {
    if (s == "minimizer_first") return Convention::MinimizerFirst;
    if (s == "maximizer_first") return Convention::MaximizerFirst;
    throw DomainError("unknown convention: " + s);
}

inline Role role_from_name(const std::string& s) {
    if (s == "minimizer") return Role::Minimizer;
    if (s == "maximizer") return Role::Maximizer;
    throw DomainError("unknown role: " + s);
}

inline void write_trace(std::ostream& os, const Trace& t) {
    json h;
    h["n"] = t.header.n;
    h["first_mover"] = convention_name(t.header.convention);
    h["seed"] = t.header.seed;
    h["minimizer"] = t.header.minimizer;
    h["maximizer"] = t.header.maximizer;
    os << h.dump() << '\n';
    for (const TraceRow& r : t.rows) {
        json j;
        j["ply"] = r.ply;
        j["role"] = role_name(r.role);
        j["edge"] = {r.edge.u, r.edge.v};
        j["edges_after"] = r.edges_after;
        if (!r.annotation.empty()) j["note"] = r.annotation;
        os << j.dump() << '\n';
    }
}

inline std::string trace_to_string(const Trace& t) {
    std::ostringstream os;
    write_trace(os, t);
    return os.str();
}

inline Trace parse_trace(std::istream& is) {
    Trace t;
    std::string line;
    if (!std::getline(is, line)) throw DomainError("empty trace");
    json h = json::parse(line);
    t.header.n = h.at("n").get<int>();
    t.header.convention = convention_from_name(h.at("first_mover").get<std::string>());
    t.header.seed = h.at("seed").get<std::uint64_t>();
    t.header.minimizer = h.at("minimizer").get<std::string>();
    t.header.maximizer = h.at("maximizer").get<std::string>();
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        TraceRow r;
        r.ply = j.at("ply").get<int>();
        r.role = role_from_name(j.at("role").get<std::string>());
        auto e = j.at("edge");
        r.edge = Edge(e.at(0).get<int>(), e.at(1).get<int>());
        r.edges_after = j.at("edges_after").get<int>();
        if (j.contains("note")) r.annotation = j.at("note");
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline Trace parse_trace_string(const std::string& s) {
    std::istringstream is(s);
    return parse_trace(is);
}

// Re-drives every recorded move through the checked engine. Throws if a move
// is illegal at its recorded position or any bookkeeping field disagrees.
inline GameState replay_trace(const Trace& t) {
    GameState st(GameConfig{t.header.n, t.header.convention});
    for (const TraceRow& r : t.rows) {
        if (r.ply != st.ply()) throw DomainError("trace ply out of order at " + std::to_string(r.ply));
        if (r.role != st.to_move())
            throw DomainError("trace role mismatch at ply " + std::to_string(r.ply));
        st.apply(r.edge);
        if (st.graph().edge_count() != r.edges_after)
            throw DomainError("edge total mismatch at ply " + std::to_string(r.ply));
    }
    return st;
}

}  // namespace satgame
