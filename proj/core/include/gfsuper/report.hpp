#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gfsuper/betti_table.hpp"

namespace gfsuper {

enum class Verdict { Match, Mismatch, Partial };

std::string to_string(Verdict v);

// Compare a computed table against a total prediction (zero beyond its
// listed dims): MATCH when every computed degree agrees and the prediction
// has no support past the computed range, PARTIAL when the computed prefix
// agrees but the prediction continues beyond it, MISMATCH otherwise.
Verdict compare_tables(const BettiTable& computed, const BettiTable& expected);

struct VerificationReport {
    std::string claim;
    std::map<std::string, std::string> params;
    BettiTable betti;     // computed
    BettiTable expected;  // predicted, treated as total
    Verdict verdict = Verdict::Mismatch;
    int degrees_checked = -1;
    std::int64_t wall_time_ms = 0;

    std::string to_json() const;
    static VerificationReport from_json(const std::string& text);
};

}  // namespace gfsuper
