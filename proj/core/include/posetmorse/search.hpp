#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "posetmorse/flow.hpp"
#include "posetmorse/morse.hpp"
#include "posetmorse/poset.hpp"

namespace posetmorse {

enum class SearchOrdering { Lexicographic, MaxDegreeFirst };

struct SearchPolicy {
    SearchOrdering ordering = SearchOrdering::Lexicographic;
    int restarts = 1;
    std::uint64_t rng_seed = 0;
    bool admissible_only = false;
};

/// Greedy Morse matching search. Candidate covers are visited in policy order
/// (restart 0) and in seeded shuffles of it (later restarts); an edge is taken
/// when both endpoints are free, it passes the admissibility filter, and the
/// matched digraph stays acyclic (checked incrementally against a maintained
/// topological order). Returns the restart winner: fewest critical points,
/// ties by lexicographically least pair set. Identical (poset, policy) input
/// yields an identical matching.
Matching greedy_matching(const Poset& x, const SearchPolicy& policy);

/// Full pipeline over one poset + matching: structural check, admissibility
/// audit, Morse function, Morse complex and inequalities where the
/// preconditions hold; stages that do not apply report their error code.
struct PipelineReport {
    GradingReport grading;
    PosetClass classification;
    MorseReport morse;
    std::optional<std::map<std::string, int>> path_lengths;
    std::optional<MorseFunction> function;
    std::string function_status;  // "ok" or an error code name
    std::optional<MorseComplexResult> complex_result;
    std::string complex_status;
    std::optional<MorseInequalities> inequalities;
    std::string inequalities_status;
};

PipelineReport verify_and_report(const Poset& x, const Matching& m);

}  // namespace posetmorse
