#include "gfsuper/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace gfsuper {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::Partial: return "PARTIAL";
    }
    return "MISMATCH";
}

Verdict compare_tables(const BettiTable& computed, const BettiTable& expected) {
    int r = computed.range;
    for (int p = 0; p <= r; ++p)
        if (computed.at(p) != expected.at(p)) return Verdict::Mismatch;
    int support = -1;
    for (int p = 0; p < static_cast<int>(expected.dims.size()); ++p)
        if (expected.dims[static_cast<std::size_t>(p)] != 0) support = p;
    return support > r ? Verdict::Partial : Verdict::Match;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["claim"] = claim;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["betti"] = betti.dims;
    j["expected"] = expected.dims;
    j["verdict"] = to_string(verdict);
    j["degrees_checked"] = degrees_checked;
    j["wall_time_ms"] = wall_time_ms;
    return j.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<std::string>();
    r.betti = BettiTable::of_dims(j.at("betti").get<std::vector<long>>());
    r.expected = BettiTable::of_dims(j.at("expected").get<std::vector<long>>());
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "MATCH")
        r.verdict = Verdict::Match;
    else if (verdict == "PARTIAL")
        r.verdict = Verdict::Partial;
    else if (verdict == "MISMATCH")
        r.verdict = Verdict::Mismatch;
    else
        throw std::invalid_argument("VerificationReport: unknown verdict " + verdict);
    r.degrees_checked = j.at("degrees_checked").get<int>();
    r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
    return r;
}

}  // namespace gfsuper
