#include "posetmorse/poset.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace posetmorse {

namespace {

// Topological order of the cover digraph (lower -> upper); empty optional on a cycle.
std::optional<std::vector<std::size_t>> topological_order(
    std::size_t n, const std::vector<std::vector<std::size_t>>& up) {
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& outs : up)
        for (std::size_t v : outs) ++indegree[v];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t v = queue[head];
        order.push_back(v);
        for (std::size_t w : up[v])
            if (--indegree[w] == 0) queue.push_back(w);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

}  // namespace

Poset Poset::from_covers(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    std::vector<std::string> ids = elements;
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] == ids[i - 1])
            fail(ErrorCode::DuplicateElement, "duplicate element '" + ids[i] + "'");

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;

    std::set<std::pair<std::size_t, std::size_t>> cover_set;
    for (const auto& [lo, hi] : covers) {
        auto il = index.find(lo);
        auto ih = index.find(hi);
        if (il == index.end()) fail(ErrorCode::UnknownElement, "unknown element '" + lo + "'");
        if (ih == index.end()) fail(ErrorCode::UnknownElement, "unknown element '" + hi + "'");
        if (il->second == ih->second)
            fail(ErrorCode::CoverCycle, "cover '" + lo + " < " + hi + "' is reflexive");
        cover_set.insert({il->second, ih->second});
    }

    Poset p;
    p.finish_from_sorted(std::move(ids),
                         {cover_set.begin(), cover_set.end()},
                         /*validate=*/true);
    return p;
}

void Poset::finish_from_sorted(std::vector<std::string> sorted_ids,
                               std::vector<std::pair<std::size_t, std::size_t>> cover_idx,
                               bool validate) {
    ids_ = std::move(sorted_ids);
    const std::size_t n = ids_.size();
    index_.clear();
    for (std::size_t i = 0; i < n; ++i) index_[ids_[i]] = i;

    up_.assign(n, {});
    down_.assign(n, {});
    std::sort(cover_idx.begin(), cover_idx.end());
    for (const auto& [lo, hi] : cover_idx) {
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
    }
    for (auto& v : down_) std::sort(v.begin(), v.end());
    cover_count_ = cover_idx.size();

    auto order = topological_order(n, up_);
    if (!order) {
        assert(validate);
        fail(ErrorCode::CoverCycle, "cover relation contains a directed cycle");
    }

    // Reachability: sweep tops-down so each row already holds its full up-set.
    above_.assign(n * n, false);
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        std::size_t v = *it;
        for (std::size_t u : up_[v]) {
            above_[v * n + u] = true;
            for (std::size_t w = 0; w < n; ++w)
                if (above_[u * n + w]) above_[v * n + w] = true;
        }
    }

    if (validate) {
        for (const auto& [lo, hi] : cover_idx) {
            for (std::size_t z = 0; z < n; ++z) {
                if (z != lo && z != hi && less(lo, z) && less(z, hi))
                    fail(ErrorCode::RedundantCover, "pair '" + ids_[lo] + " < " + ids_[hi] +
                                                        "' is implied transitively (via '" +
                                                        ids_[z] + "'), not a cover");
            }
        }
    }
}

std::optional<std::size_t> Poset::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Poset::index_of(const std::string& id) const {
    auto v = find(id);
    if (!v) fail(ErrorCode::UnknownElement, "unknown element '" + id + "'");
    return *v;
}

bool Poset::is_cover(std::size_t lower, std::size_t upper) const {
    return std::binary_search(up_[lower].begin(), up_[lower].end(), upper);
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(cover_count_);
    for (std::size_t v = 0; v < size(); ++v)
        for (std::size_t u : up_[v]) out.push_back({v, u});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v)
        if (down_[v].empty()) out.push_back(v);
    return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v)
        if (up_[v].empty()) out.push_back(v);
    return out;
}

std::vector<std::size_t> Poset::lower_open_set(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < size(); ++w)
        if (less(w, v)) out.push_back(w);
    return out;
}

std::vector<std::size_t> Poset::upper_open_set(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < size(); ++w)
        if (less(v, w)) out.push_back(w);
    return out;
}

Poset Poset::induced(std::vector<std::size_t> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    const std::size_t k = subset.size();

    std::vector<std::string> sub_ids(k);
    for (std::size_t i = 0; i < k; ++i) sub_ids[i] = ids_[subset[i]];

    // Covers of the subposet: comparable pairs with nothing of the subset in between.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!less(subset[i], subset[j])) continue;
            bool direct = true;
            for (std::size_t m = 0; m < k && direct; ++m)
                if (less(subset[i], subset[m]) && less(subset[m], subset[j])) direct = false;
            if (direct) covers.push_back({i, j});
        }
    }

    Poset p;
    p.finish_from_sorted(std::move(sub_ids), std::move(covers), /*validate=*/false);
    return p;
}

Poset Poset::interval(const std::string& id, IntervalKind kind) const {
    std::size_t v = index_of(id);
    std::vector<std::size_t> subset;
    switch (kind) {
        case IntervalKind::LowerClosed:
            subset = lower_open_set(v);
            subset.push_back(v);
            break;
        case IntervalKind::LowerOpen:
            subset = lower_open_set(v);
            break;
        case IntervalKind::UpperClosed:
            subset = upper_open_set(v);
            subset.push_back(v);
            break;
        case IntervalKind::UpperOpen:
            subset = upper_open_set(v);
            break;
        case IntervalKind::Link: {
            subset = lower_open_set(v);
            auto up = upper_open_set(v);
            subset.insert(subset.end(), up.begin(), up.end());
            break;
        }
    }
    return induced(std::move(subset));
}

bool Poset::operator==(const Poset& other) const {
    return ids_ == other.ids_ && up_ == other.up_;
}

Heights compute_heights(const Poset& x) {
    Heights h;
    h.by_index.assign(x.size(), 0);
    auto covers = x.cover_pairs();

    // Longest chain below each element, by sweeping in topological order.
    std::vector<std::size_t> order;
    {
        std::vector<std::size_t> indegree(x.size(), 0);
        for (auto& [lo, hi] : covers) ++indegree[hi];
        for (std::size_t v = 0; v < x.size(); ++v)
            if (indegree[v] == 0) order.push_back(v);
        for (std::size_t head = 0; head < order.size(); ++head)
            for (std::size_t u : x.upper_covers(order[head]))
                if (--indegree[u] == 0) order.push_back(u);
    }
    for (std::size_t v : order)
        for (std::size_t u : x.upper_covers(v))
            h.by_index[u] = std::max(h.by_index[u], h.by_index[v] + 1);

    h.poset_height = -1;
    for (int v : h.by_index) h.poset_height = std::max(h.poset_height, v);

    // Every lower set is homogeneous iff every cover raises height by exactly one.
    h.graded = true;
    for (auto& [lo, hi] : covers)
        if (h.by_index[hi] != h.by_index[lo] + 1) h.graded = false;
    return h;
}

GradingReport grading_info(const Poset& x) {
    Heights h = compute_heights(x);
    GradingReport r;
    for (std::size_t v = 0; v < x.size(); ++v) r.height_of[x.id(v)] = h.by_index[v];
    r.poset_height = h.poset_height;
    r.graded = h.graded;

    r.homogeneous = h.graded;
    for (std::size_t v : x.maximal_elements())
        if (h.by_index[v] != h.poset_height) r.homogeneous = false;

    if (r.graded) r.degree_of = r.height_of;
    return r;
}

Poset join(const Poset& a, const Poset& b) {
    std::vector<std::string> ids = a.ids();
    ids.insert(ids.end(), b.ids().begin(), b.ids().end());

    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& [lo, hi] : a.cover_pairs()) covers.push_back({a.id(lo), a.id(hi)});
    for (auto& [lo, hi] : b.cover_pairs()) covers.push_back({b.id(lo), b.id(hi)});
    for (std::size_t m : a.maximal_elements())
        for (std::size_t w : b.minimal_elements()) covers.push_back({a.id(m), b.id(w)});

    return Poset::from_covers(ids, covers);
}

Poset cone(const Poset& x, const std::string& apex) {
    Poset point = Poset::from_covers({apex}, {});
    return join(x, point);
}

Poset opposite(const Poset& x) {
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& [lo, hi] : x.cover_pairs()) covers.push_back({x.id(hi), x.id(lo)});
    return Poset::from_covers(x.ids(), covers);
}

Poset skeleton(const Poset& x, int p) {
    Heights h = compute_heights(x);
    if (!h.graded) fail(ErrorCode::NotGraded, "skeleton requires a graded poset");
    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < x.size(); ++v)
        if (h.by_index[v] <= p) subset.push_back(v);
    return x.induced(std::move(subset));
}

namespace {

bool is_beat_point(const Poset& x, std::size_t v) {
    auto up = x.upper_open_set(v);
    for (std::size_t m : up) {
        bool minimum = true;
        for (std::size_t y : up)
            if (y != m && !x.less(m, y)) minimum = false;
        if (minimum) return true;  // strict up-set has a minimum
    }
    auto down = x.lower_open_set(v);
    for (std::size_t m : down) {
        bool maximum = true;
        for (std::size_t y : down)
            if (y != m && !x.less(y, m)) maximum = false;
        if (maximum) return true;  // strict down-set has a maximum
    }
    return false;
}

}  // namespace

Poset beat_point_reduce(const Poset& x) {
    Poset current = x;
    for (;;) {
        std::optional<std::size_t> victim;
        for (std::size_t v = 0; v < current.size(); ++v) {
            if (is_beat_point(current, v)) {
                victim = v;  // ids are sorted, so the first hit is the smallest identifier
                break;
            }
        }
        if (!victim) return current;
        std::vector<std::size_t> rest;
        for (std::size_t v = 0; v < current.size(); ++v)
            if (v != *victim) rest.push_back(v);
        current = current.induced(std::move(rest));
    }
}

}  // namespace posetmorse
