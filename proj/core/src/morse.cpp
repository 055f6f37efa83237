#include "posetmorse/morse.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "posetmorse/chain_complex.hpp"
#include "posetmorse/simplicial.hpp"

namespace posetmorse {

Matching Matching::from_pairs(std::vector<std::pair<std::string, std::string>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Matching{std::move(pairs)};
}

namespace {

// Matched-digraph adjacency: matched covers oriented lower -> upper, all
// other covers upper -> lower. `matched_up[v]` is the matched partner above v,
// if any.
struct MatchedDigraph {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::optional<std::size_t>> matched_up;
    std::vector<std::optional<std::size_t>> matched_down;
};

MatchedDigraph build_digraph(const Poset& x,
                             const std::set<std::pair<std::size_t, std::size_t>>& matched) {
    MatchedDigraph g;
    g.out.assign(x.size(), {});
    g.matched_up.assign(x.size(), std::nullopt);
    g.matched_down.assign(x.size(), std::nullopt);
    for (auto& [lo, hi] : x.cover_pairs()) {
        if (matched.count({lo, hi})) {
            g.out[lo].push_back(hi);
            g.matched_up[lo] = hi;
            g.matched_down[hi] = lo;
        } else {
            g.out[hi].push_back(lo);
        }
    }
    for (auto& v : g.out) std::sort(v.begin(), v.end());
    return g;
}

// First directed cycle in identifier DFS order, empty if acyclic.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& out) {
    const std::size_t n = out.size();
    enum { White, Gray, Black };
    std::vector<int> color(n, White);
    std::vector<std::size_t> stack;

    std::vector<std::size_t> cycle;
    auto dfs = [&](auto&& self, std::size_t v) -> bool {
        color[v] = Gray;
        stack.push_back(v);
        for (std::size_t w : out[v]) {
            if (color[w] == Gray) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (color[w] == White && self(self, w)) return true;
        }
        stack.pop_back();
        color[v] = Black;
        return false;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (color[v] == White && dfs(dfs, v)) return cycle;
    return {};
}

}  // namespace

bool edge_admissible(const Poset& x, const std::string& lower, const std::string& upper) {
    std::size_t lo = x.index_of(lower);
    std::size_t hi = x.index_of(upper);
    if (!x.is_cover(lo, hi))
        fail(ErrorCode::NotACover, "'" + lower + " < " + upper + "' is not a cover");
    std::vector<std::size_t> subset;
    for (std::size_t w : x.lower_open_set(hi))
        if (w != lo) subset.push_back(w);
    Poset deleted = x.induced(std::move(subset));
    return homology(chain_complex(order_complex(deleted), /*augmented=*/true)).trivial();
}

MorseReport morse_check(const Poset& x, const Matching& m) {
    MorseReport report;

    std::set<std::pair<std::size_t, std::size_t>> matched;
    std::vector<std::size_t> incidence(x.size(), 0);
    for (const auto& [lo_id, hi_id] : m.pairs) {
        auto lo = x.find(lo_id);
        auto hi = x.find(hi_id);
        if (!lo || !hi || !x.is_cover(*lo, *hi)) {
            report.invalid_pairs.push_back({lo_id, hi_id});
            continue;
        }
        matched.insert({*lo, *hi});
        ++incidence[*lo];
        ++incidence[*hi];
    }
    for (const auto& [lo, hi] : matched)
        if (incidence[lo] > 1 || incidence[hi] > 1)
            report.invalid_pairs.push_back({x.id(lo), x.id(hi)});
    std::sort(report.invalid_pairs.begin(), report.invalid_pairs.end());
    report.invalid_pairs.erase(
        std::unique(report.invalid_pairs.begin(), report.invalid_pairs.end()),
        report.invalid_pairs.end());
    report.is_matching = report.invalid_pairs.empty();

    MatchedDigraph g = build_digraph(x, matched);
    auto cycle = find_cycle(g.out);
    report.is_acyclic = cycle.empty();
    for (std::size_t v : cycle) report.cycle_witness.push_back(x.id(v));

    if (report.is_matching) {
        for (std::size_t v = 0; v < x.size(); ++v)
            if (incidence[v] == 0) report.critical.push_back(x.id(v));
    }

    for (const auto& [lo, hi] : matched)
        if (!edge_admissible(x, x.id(lo), x.id(hi)))
            report.inadmissible_edges.push_back({x.id(lo), x.id(hi)});
    std::sort(report.inadmissible_edges.begin(), report.inadmissible_edges.end());
    return report;
}

namespace {

// Elements whose strict down-set is not a homology (h-1)-sphere.
std::vector<std::string> sphere_failures(const Poset& x, const Heights& h) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < x.size(); ++v) {
        Poset below = x.induced(x.lower_open_set(v));
        HomologySummary got = homology(chain_complex(order_complex(below), /*augmented=*/true));
        if (!(got == sphere_homology(h.by_index[v] - 1))) out.push_back(x.id(v));
    }
    return out;
}

}  // namespace

bool is_cellular(const Poset& x) {
    Heights h = compute_heights(x);
    return h.graded && sphere_failures(x, h).empty();
}

PosetClass classify_poset(const Poset& x) {
    PosetClass out;
    Heights h = compute_heights(x);
    out.graded = h.graded;

    out.failing_elements = sphere_failures(x, h);
    bool sphere_ok = out.failing_elements.empty();
    out.homologically_h_regular = sphere_ok;
    // Degree equals height on graded posets, so the cellular test coincides
    // with the height-sphere test there.
    out.cellular = out.graded && sphere_ok;

    out.homologically_admissible = true;
    for (auto& [lo, hi] : x.cover_pairs()) {
        if (!edge_admissible(x, x.id(lo), x.id(hi))) {
            out.homologically_admissible = false;
            out.failing_edges.push_back({x.id(lo), x.id(hi)});
        }
    }
    return out;
}

std::map<std::string, int> path_stats(const Poset& x, const Matching& m) {
    MorseReport report = morse_check(x, m);
    if (!report.is_matching || !report.is_acyclic)
        fail(ErrorCode::NotMorse, "path statistics require a Morse matching");

    std::set<std::pair<std::size_t, std::size_t>> matched;
    for (const auto& [lo, hi] : m.pairs) matched.insert({x.index_of(lo), x.index_of(hi)});
    MatchedDigraph g = build_digraph(x, matched);

    // Successor step of an alternating path: up the matched edge, then down to
    // a different lower cover.
    std::vector<std::vector<std::size_t>> next(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (!g.matched_up[v]) continue;
        for (std::size_t w : x.lower_covers(*g.matched_up[v]))
            if (w != v) next[v].push_back(w);
    }

    std::vector<int> memo(x.size(), -1);
    auto longest = [&](auto&& self, std::size_t v) -> int {
        if (memo[v] >= 0) return memo[v];
        int best = 0;
        for (std::size_t w : next[v]) best = std::max(best, 1 + self(self, w));
        return memo[v] = best;
    };

    std::map<std::string, int> out;
    for (std::size_t v = 0; v < x.size(); ++v) out[x.id(v)] = longest(longest, v);
    return out;
}

std::vector<std::string> critical_points(const Poset& x, const MorseFunction& f) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < x.size(); ++v) {
        const Rat& fv = f.values.at(x.id(v));
        bool critical = true;
        for (std::size_t u : x.upper_covers(v))
            if (f.values.at(x.id(u)) <= fv) critical = false;
        for (std::size_t w : x.lower_covers(v))
            if (f.values.at(x.id(w)) >= fv) critical = false;
        if (critical) out.push_back(x.id(v));
    }
    return out;
}

MorseFunction morse_function(const Poset& x, const Matching& m) {
    Heights h = compute_heights(x);
    if (!h.graded) fail(ErrorCode::NotGraded, "the staged construction requires a graded poset");
    MorseReport report = morse_check(x, m);
    if (!report.is_matching || !report.is_acyclic)
        fail(ErrorCode::NotMorse, "not a Morse matching");

    std::map<std::string, int> lengths = path_stats(x, m);
    std::vector<std::optional<std::size_t>> matched_down(x.size());
    for (const auto& [lo, hi] : m.pairs) matched_down[x.index_of(hi)] = x.index_of(lo);

    std::vector<Rat> f(x.size(), Rat(0));
    for (int stage = 1; stage <= h.poset_height; ++stage) {
        int max_len = -1;
        for (std::size_t v = 0; v < x.size(); ++v)
            if (h.by_index[v] == stage - 1) max_len = std::max(max_len, lengths.at(x.id(v)));
        if (max_len < 0) {
            bool stage_used = false;
            for (std::size_t v = 0; v < x.size(); ++v)
                if (h.by_index[v] == stage) stage_used = true;
            if (stage_used)
                fail(ErrorCode::DegenerateStage,
                     "no element of degree " + std::to_string(stage - 1));
            continue;
        }

        std::vector<Rat> prev = f;
        for (std::size_t v = 0; v < x.size(); ++v) {
            if (h.by_index[v] == stage - 1) {
                f[v] = prev[v] + Rat(lengths.at(x.id(v)), max_len + 1);
            } else if (h.by_index[v] == stage) {
                if (matched_down[v]) {
                    std::size_t w = *matched_down[v];
                    f[v] = prev[w] + Rat(lengths.at(x.id(w)), max_len + 1);
                } else {
                    f[v] = Rat(stage);
                }
            }
        }
    }

    MorseFunction out;
    for (std::size_t v = 0; v < x.size(); ++v) out.values[x.id(v)] = f[v];

    // Construction contract: one descent at most per side, and the critical
    // sets of the function and of the matching coincide.
    for (std::size_t v = 0; v < x.size(); ++v) {
        int up_viol = 0, down_viol = 0;
        for (std::size_t u : x.upper_covers(v))
            if (f[u] <= f[v]) ++up_viol;
        for (std::size_t w : x.lower_covers(v))
            if (f[w] >= f[v]) ++down_viol;
        if (up_viol > 1 || down_viol > 1)
            throw std::logic_error("constructed function is not a Morse function");
    }
    if (critical_points(x, out) != report.critical)
        throw std::logic_error("constructed function has a different critical set");
    return out;
}

}  // namespace posetmorse
