#pragma once

// Internal JSON composition for reports; public callers go through
// json_report.hpp. Keys serialize sorted (nlohmann default), which gives the
// stable output the CLI contract requires.

#include <json.hpp>
#include <limits>

#include "posetmorse/cellular.hpp"
#include "posetmorse/chain_complex.hpp"
#include "posetmorse/flow.hpp"
#include "posetmorse/morse.hpp"
#include "posetmorse/poset.hpp"
#include "posetmorse/search.hpp"

namespace posetmorse {

inline nlohmann::json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

nlohmann::json build_json(const GradingReport& r);
nlohmann::json build_json(const HomologySummary& h);
nlohmann::json build_json(const MorseReport& r);
nlohmann::json build_json(const PosetClass& c);
nlohmann::json build_json(const MorseFunction& f);
nlohmann::json build_json(const ChainComplex& c);
nlohmann::json build_json(const MorseComplexResult& r, bool emit_morse);
nlohmann::json build_json(const MorseInequalities& r);
nlohmann::json build_json(const PipelineReport& r);

std::string render_json(const nlohmann::json& j, bool pretty);

}  // namespace posetmorse
