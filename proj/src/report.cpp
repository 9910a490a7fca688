#include "tcc/report.hpp"

#include <stdexcept>

namespace tcc {

using nlohmann::json;

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
    if (auto it = j.find(key); it != j.end())
        v = it->get<T>();
    else
        v.reset();
}

json pairs(const std::vector<std::pair<std::uint32_t, std::size_t>>& s) {
    json arr = json::array();
    for (const auto& [value, mult] : s) arr.push_back({{"eigenvalue", value}, {"multiplicity", mult}});
    return arr;
}

std::vector<std::pair<std::uint32_t, std::size_t>> unpairs(const json& arr) {
    std::vector<std::pair<std::uint32_t, std::size_t>> out;
    for (const auto& e : arr) out.emplace_back(e.at("eigenvalue").get<std::uint32_t>(), e.at("multiplicity").get<std::size_t>());
    return out;
}

}  // namespace

void to_json(json& j, const Rate& r) { j = r.str(); }

void from_json(const json& j, Rate& r) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw Error("rate must be written as 'k/N', got '" + s + "'");
    r.k = std::stoull(s.substr(0, slash));
    r.n = std::stoull(s.substr(slash + 1));
}

void to_json(json& j, const ChannelStats& s) {
    j = json{{"trials", s.trials}, {"successes", s.successes}, {"ambiguous", s.ambiguous}, {"miscorrected", s.miscorrected}};
}

void from_json(const json& j, ChannelStats& s) {
    j.at("trials").get_to(s.trials);
    j.at("successes").get_to(s.successes);
    j.at("ambiguous").get_to(s.ambiguous);
    j.at("miscorrected").get_to(s.miscorrected);
}

void to_json(json& j, const CodeSummary& s) {
    j = json{{"p", s.p}, {"n", s.n}, {"a", s.a}, {"length", s.length}, {"dimension", s.dimension}};
    put(j, "x", s.x);
    put(j, "y", s.y);
    put(j, "min_distance", s.min_distance);
    put(j, "mds", s.mds);
    put(j, "detect", s.detect);
    put(j, "correct", s.correct);
    put(j, "rate", s.rate);
    j["generator"] = s.generator;
}

void from_json(const json& j, CodeSummary& s) {
    j.at("p").get_to(s.p);
    j.at("n").get_to(s.n);
    j.at("a").get_to(s.a);
    j.at("length").get_to(s.length);
    j.at("dimension").get_to(s.dimension);
    get(j, "x", s.x);
    get(j, "y", s.y);
    get(j, "min_distance", s.min_distance);
    get(j, "mds", s.mds);
    get(j, "detect", s.detect);
    get(j, "correct", s.correct);
    get(j, "rate", s.rate);
    j.at("generator").get_to(s.generator);
}

void to_json(json& j, const SpectrumSummary& s) {
    j = json{{"p", s.p}, {"n", s.n}, {"x", s.x}, {"y", s.y}, {"spectrum", pairs(s.spectrum)},
             {"diagonalizable", s.diagonalizable}};
    if (s.scan) j["scan"] = pairs(*s.scan);
}

void from_json(const json& j, SpectrumSummary& s) {
    j.at("p").get_to(s.p);
    j.at("n").get_to(s.n);
    j.at("x").get_to(s.x);
    j.at("y").get_to(s.y);
    s.spectrum = unpairs(j.at("spectrum"));
    if (auto it = j.find("scan"); it != j.end())
        s.scan = unpairs(*it);
    else
        s.scan.reset();
    j.at("diagonalizable").get_to(s.diagonalizable);
}

void to_json(json& j, const SimulationSummary& s) {
    j = json{{"p", s.p},     {"n", s.n},       {"a", s.a},       {"length", s.length}, {"dimension", s.dimension},
             {"t", s.t},     {"mode", s.mode}, {"seed", s.seed}, {"pass", s.pass}};
    put(j, "x", s.x);
    put(j, "y", s.y);
    put(j, "stats", s.stats);
    put(j, "correction_ok", s.correction_ok);
    put(j, "detection_ok", s.detection_ok);
    put(j, "capacity", s.capacity);
}

void from_json(const json& j, SimulationSummary& s) {
    j.at("p").get_to(s.p);
    j.at("n").get_to(s.n);
    j.at("a").get_to(s.a);
    j.at("length").get_to(s.length);
    j.at("dimension").get_to(s.dimension);
    j.at("t").get_to(s.t);
    j.at("mode").get_to(s.mode);
    j.at("seed").get_to(s.seed);
    j.at("pass").get_to(s.pass);
    get(j, "x", s.x);
    get(j, "y", s.y);
    get(j, "stats", s.stats);
    get(j, "correction_ok", s.correction_ok);
    get(j, "detection_ok", s.detection_ok);
    get(j, "capacity", s.capacity);
}

void to_json(json& j, const VerifyRow& r) {
    j = json{{"p", r.p},     {"n", r.n},   {"x", r.x},
             {"y", r.y},     {"a", r.a},   {"hypotheses_met", r.hypotheses_met},
             {"dim", r.dim}};
    put(j, "d", r.d);
    put(j, "mds", r.mds);
    put(j, "matches_theorem", r.matches_theorem);
    if (!r.note.empty()) j["note"] = r.note;
}

void from_json(const json& j, VerifyRow& r) {
    j.at("p").get_to(r.p);
    j.at("n").get_to(r.n);
    j.at("x").get_to(r.x);
    j.at("y").get_to(r.y);
    j.at("a").get_to(r.a);
    j.at("hypotheses_met").get_to(r.hypotheses_met);
    j.at("dim").get_to(r.dim);
    get(j, "d", r.d);
    get(j, "mds", r.mds);
    get(j, "matches_theorem", r.matches_theorem);
    r.note = j.value("note", std::string{});
}

}  // namespace tcc
