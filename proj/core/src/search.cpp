#include "posetmorse/search.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "posetmorse/rng.hpp"

namespace posetmorse {

namespace {

/// Incremental cycle detection via a maintained topological order
/// (Pearce-Kelly). Rejected insertions leave the structure untouched.
class OnlineTopology {
public:
    explicit OnlineTopology(std::size_t n) : out_(n), in_(n), position_(n) {
        for (std::size_t i = 0; i < n; ++i) position_[i] = i;
    }

    bool add_edge(std::size_t u, std::size_t v) {
        if (position_[u] >= position_[v]) {
            forward_.clear();
            if (!discover_forward(v, position_[u])) return false;  // u reachable from v
            backward_.clear();
            discover_backward(u, position_[v]);
            reorder();
        }
        out_[u].push_back(v);
        in_[v].push_back(u);
        return true;
    }

    void remove_edge(std::size_t u, std::size_t v) {
        out_[u].erase(std::find(out_[u].begin(), out_[u].end(), v));
        in_[v].erase(std::find(in_[v].begin(), in_[v].end(), u));
    }

private:
    bool discover_forward(std::size_t v, std::size_t upper_bound) {
        forward_.push_back(v);
        for (std::size_t w : out_[v]) {
            if (position_[w] == upper_bound) return false;
            if (position_[w] < upper_bound &&
                std::find(forward_.begin(), forward_.end(), w) == forward_.end()) {
                if (!discover_forward(w, upper_bound)) return false;
            }
        }
        return true;
    }

    void discover_backward(std::size_t u, std::size_t lower_bound) {
        backward_.push_back(u);
        for (std::size_t w : in_[u]) {
            if (position_[w] > lower_bound &&
                std::find(backward_.begin(), backward_.end(), w) == backward_.end())
                discover_backward(w, lower_bound);
        }
    }

    void reorder() {
        auto by_position = [&](std::size_t a, std::size_t b) {
            return position_[a] < position_[b];
        };
        std::sort(backward_.begin(), backward_.end(), by_position);
        std::sort(forward_.begin(), forward_.end(), by_position);

        std::vector<std::size_t> slots;
        slots.reserve(backward_.size() + forward_.size());
        for (std::size_t w : backward_) slots.push_back(position_[w]);
        for (std::size_t w : forward_) slots.push_back(position_[w]);
        std::sort(slots.begin(), slots.end());

        std::size_t next = 0;
        for (std::size_t w : backward_) position_[w] = slots[next++];
        for (std::size_t w : forward_) position_[w] = slots[next++];
    }

    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::vector<std::size_t> position_;
    std::vector<std::size_t> forward_;
    std::vector<std::size_t> backward_;
};

}  // namespace

Matching greedy_matching(const Poset& x, const SearchPolicy& policy) {
    Heights h = compute_heights(x);
    auto covers = x.cover_pairs();

    std::vector<std::size_t> base(covers.size());
    for (std::size_t i = 0; i < base.size(); ++i) base[i] = i;
    if (policy.ordering == SearchOrdering::MaxDegreeFirst) {
        std::stable_sort(base.begin(), base.end(), [&](std::size_t a, std::size_t b) {
            return h.by_index[covers[a].second] > h.by_index[covers[b].second];
        });
    }

    std::vector<int> admissible_cache(covers.size(), -1);
    auto admissible = [&](std::size_t e) {
        if (admissible_cache[e] < 0)
            admissible_cache[e] =
                edge_admissible(x, x.id(covers[e].first), x.id(covers[e].second)) ? 1 : 0;
        return admissible_cache[e] == 1;
    };

    std::optional<std::vector<std::pair<std::string, std::string>>> best;
    std::size_t best_matched = 0;

    const int restarts = std::max(policy.restarts, 1);
    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<std::size_t> order = base;
        if (restart > 0) {
            DeterministicRng rng(derive_seed(policy.rng_seed, restart));
            rng.shuffle(order);
        }

        OnlineTopology topo(x.size());
        for (const auto& [lo, hi] : covers) {
            bool ok = topo.add_edge(hi, lo);  // unmatched covers point down
            assert(ok);
            (void)ok;
        }

        std::vector<bool> matched(x.size(), false);
        std::vector<std::pair<std::string, std::string>> pairs;
        for (std::size_t e : order) {
            auto [lo, hi] = covers[e];
            if (matched[lo] || matched[hi]) continue;
            if (policy.admissible_only && !admissible(e)) continue;
            topo.remove_edge(hi, lo);
            if (topo.add_edge(lo, hi)) {
                matched[lo] = matched[hi] = true;
                pairs.push_back({x.id(lo), x.id(hi)});
            } else {
                bool restored = topo.add_edge(hi, lo);
                assert(restored);
                (void)restored;
            }
        }

        std::sort(pairs.begin(), pairs.end());
        if (!best || pairs.size() > best_matched ||
            (pairs.size() == best_matched && pairs < *best)) {
            best_matched = pairs.size();
            best = std::move(pairs);
        }
    }
    return Matching::from_pairs(std::move(*best));
}

PipelineReport verify_and_report(const Poset& x, const Matching& m) {
    PipelineReport report;
    report.grading = grading_info(x);
    report.classification = classify_poset(x);
    report.morse = morse_check(x, m);

    bool morse_ok = report.morse.is_matching && report.morse.is_acyclic;
    if (morse_ok) report.path_lengths = path_stats(x, m);

    auto run = [&](auto&& op, auto& slot, std::string& status) {
        try {
            slot = op();
            status = "ok";
        } catch (const Error& e) {
            status = error_code_name(e.code());
        }
    };
    run([&] { return morse_function(x, m); }, report.function, report.function_status);
    run([&] { return morse_complex(x, m); }, report.complex_result, report.complex_status);
    run([&] { return morse_inequalities(x, m); }, report.inequalities,
        report.inequalities_status);
    return report;
}

}  // namespace posetmorse
