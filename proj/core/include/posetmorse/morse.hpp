#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetmorse/numbers.hpp"
#include "posetmorse/poset.hpp"

namespace posetmorse {

/// A candidate discrete vector field: Hasse edges (lower, upper) intended as
/// matched pairs. Canonicalized to a sorted, deduplicated pair list.
struct Matching {
    std::vector<std::pair<std::string, std::string>> pairs;

    static Matching from_pairs(std::vector<std::pair<std::string, std::string>> pairs);
    bool operator==(const Matching&) const = default;
};

struct MorseReport {
    bool is_matching = false;
    std::vector<std::pair<std::string, std::string>> invalid_pairs;  // not covers, unknown, or reused
    bool is_acyclic = false;
    std::vector<std::string> cycle_witness;  // directed cycle in the matched digraph, if any
    std::vector<std::string> critical;       // filled exactly when is_matching
    std::vector<std::pair<std::string, std::string>> inadmissible_edges;  // pairs only
};

/// Builds the matched digraph (matched covers point up, all others down),
/// runs cycle detection, and audits each pair for homological admissibility.
/// Failures are reported, never thrown.
MorseReport morse_check(const Poset& x, const Matching& m);

/// A cover (lower, upper) is homologically admissible when the strict
/// down-set of the upper element minus the lower one is acyclic (all reduced
/// homology of its order complex vanishes).
bool edge_admissible(const Poset& x, const std::string& lower, const std::string& upper);

struct PosetClass {
    bool graded = false;
    bool cellular = false;
    bool homologically_h_regular = false;
    bool homologically_admissible = false;
    std::vector<std::string> failing_elements;  // strict down-set is not a homology sphere
    std::vector<std::pair<std::string, std::string>> failing_edges;  // inadmissible covers
};

PosetClass classify_poset(const Poset& x);

/// Cellular test alone (graded + homology-sphere down-sets), without the
/// per-edge admissibility audit of classify_poset.
bool is_cellular(const Poset& x);

/// Longest alternating (matched-up, cover-down) path length from each
/// element. Requires a Morse matching.
std::map<std::string, int> path_stats(const Poset& x, const Matching& m);

struct MorseFunction {
    std::map<std::string, Rat> values;
};

/// Critical points of a Morse function: no upper cover with a value at most
/// f(x) and no lower cover with a value at least f(x).
std::vector<std::string> critical_points(const Poset& x, const MorseFunction& f);

/// Staged construction of a Morse function with the same critical set as the
/// matching. Exact rational arithmetic; requires a graded poset and a Morse
/// matching.
MorseFunction morse_function(const Poset& x, const Matching& m);

}  // namespace posetmorse
