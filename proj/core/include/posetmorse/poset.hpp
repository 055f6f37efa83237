#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetmorse/errors.hpp"

namespace posetmorse {

enum class IntervalKind { LowerClosed, LowerOpen, UpperClosed, UpperOpen, Link };

/// Finite poset encoded by its cover relation (Hasse diagram).
///
/// Identifiers are canonicalized to lexicographic order at construction; that
/// order fixes every deterministic tie-break downstream. The full strict
/// order is kept as a precomputed reachability bitset because order queries
/// dominate the Morse checks. Values are immutable once built.
class Poset {
public:
    Poset() = default;  // the empty poset is a legal value

    /// Validating factory. Rejects duplicate identifiers, covers naming
    /// unknown identifiers, directed cycles, and listed pairs that are
    /// transitively implied (not true covers).
    static Poset from_covers(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& covers);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(std::size_t v) const { return ids_[v]; }
    std::optional<std::size_t> find(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;  // throws UnknownElement

    /// Strict order a < b.
    bool less(std::size_t a, std::size_t b) const { return above_[a * size() + b]; }
    bool is_cover(std::size_t lower, std::size_t upper) const;

    const std::vector<std::size_t>& upper_covers(std::size_t v) const { return up_[v]; }
    const std::vector<std::size_t>& lower_covers(std::size_t v) const { return down_[v]; }
    std::size_t cover_count() const { return cover_count_; }
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;  // (lower, upper), sorted

    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

    std::vector<std::size_t> lower_open_set(std::size_t v) const;
    std::vector<std::size_t> upper_open_set(std::size_t v) const;

    /// Induced subposet on the given element indices; covers are recomputed
    /// as covers of the subposet.
    Poset induced(std::vector<std::size_t> subset) const;

    Poset interval(const std::string& id, IntervalKind kind) const;

    bool operator==(const Poset& other) const;

private:
    std::vector<std::string> ids_;           // lexicographically sorted
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
    std::vector<bool> above_;                // above_[a*n + b]  <=>  a < b
    std::size_t cover_count_ = 0;

    void finish_from_sorted(std::vector<std::string> sorted_ids,
                            std::vector<std::pair<std::size_t, std::size_t>> cover_idx,
                            bool validate);
};

/// Heights, gradedness and homogeneity of a poset.
struct GradingReport {
    std::map<std::string, int> height_of;
    int poset_height = -1;  // -1 for the empty poset
    bool graded = false;
    bool homogeneous = false;
    std::map<std::string, int> degree_of;  // present only when graded (== height)
};

GradingReport grading_info(const Poset& x);

/// Heights by element index; internal fast path shared by the Morse modules.
struct Heights {
    std::vector<int> by_index;
    int poset_height = -1;
    bool graded = false;
};
Heights compute_heights(const Poset& x);

Poset join(const Poset& a, const Poset& b);
Poset cone(const Poset& x, const std::string& apex = "*");
Poset opposite(const Poset& x);
Poset skeleton(const Poset& x, int p);  // NotGraded on ungraded input

/// Removes up/down beat points (strict up-set with a minimum, strict down-set
/// with a maximum) until none remain; smallest identifier first, recomputing
/// after each removal.
Poset beat_point_reduce(const Poset& x);

}  // namespace posetmorse
