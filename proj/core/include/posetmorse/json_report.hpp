#pragma once

#include <string>

#include "posetmorse/cellular.hpp"
#include "posetmorse/chain_complex.hpp"
#include "posetmorse/flow.hpp"
#include "posetmorse/morse.hpp"
#include "posetmorse/search.hpp"

namespace posetmorse {

// Canonical JSON renderings: sorted keys, canonical integer formatting,
// rationals as lowest-term strings. Byte-stable across runs.

std::string to_json_string(const GradingReport& r, bool pretty = false);
std::string to_json_string(const HomologySummary& h, bool pretty = false);
std::string to_json_string(const MorseReport& r, bool pretty = false);
std::string to_json_string(const PosetClass& c, bool pretty = false);
std::string to_json_string(const MorseFunction& f, bool pretty = false);
std::string to_json_string(const ChainComplex& c, bool pretty = false);
std::string to_json_string(const MorseComplexResult& r, bool emit_morse = false,
                           bool pretty = false);
std::string to_json_string(const MorseInequalities& r, bool pretty = false);
std::string to_json_string(const PipelineReport& r, bool pretty = false);

}  // namespace posetmorse
