#include "posetmorse/simplicial.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace posetmorse {

Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [simplex, coeff] : c) {
        if (simplex.size() < 2) continue;  // vertices have empty boundary (unaugmented)
        Int sign = 1;
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            Simplex face;
            face.reserve(simplex.size() - 1);
            for (std::size_t j = 0; j < simplex.size(); ++j)
                if (j != i) face.push_back(simplex[j]);
            Int& entry = out[face];
            entry += sign * coeff;
            if (entry == 0) out.erase(face);
            sign = -sign;
        }
    }
    return out;
}

std::string simplex_label(const Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += '.';
        out += s[i];
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
    std::set<Simplex> canon;
    for (const Simplex& f : facets) {
        if (f.empty()) continue;
        Simplex s = f;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        canon.insert(std::move(s));
    }
    // Drop facets contained in another facet.
    std::vector<Simplex> maximal;
    for (const Simplex& f : canon) {
        bool contained = false;
        for (const Simplex& g : canon) {
            if (f == g || g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(f);
    }

    SimplicialComplex k;
    k.facets_ = std::move(maximal);

    std::set<std::string> verts;
    std::set<Simplex> all;
    for (const Simplex& f : k.facets_) {
        for (const std::string& v : f) verts.insert(v);
        // All nonempty subsets of the facet.
        const std::size_t m = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) s.push_back(f[i]);
            all.insert(std::move(s));
        }
    }
    k.vertices_.assign(verts.begin(), verts.end());

    int dim = -1;
    for (const Simplex& s : all) dim = std::max(dim, static_cast<int>(s.size()) - 1);
    k.by_dim_.assign(dim + 1, {});
    for (const Simplex& s : all) k.by_dim_[s.size() - 1].push_back(s);  // set order is lex
    for (std::size_t p = 0; p < k.by_dim_.size(); ++p)
        for (std::size_t i = 0; i < k.by_dim_[p].size(); ++i) k.index_[k.by_dim_[p][i]] = i;
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    static const std::vector<Simplex> none;
    if (p < 0 || p >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[p];
}

std::size_t SimplicialComplex::simplex_count() const {
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::simplex_index(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SimplicialComplex order_complex(const Poset& x) {
    if (x.empty()) return {};
    // Maximal chains are exactly the cover paths from minimal to maximal elements.
    std::vector<Simplex> facets;
    std::vector<std::size_t> path;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        path.push_back(v);
        if (x.upper_covers(v).empty()) {
            Simplex s;
            for (std::size_t w : path) s.push_back(x.id(w));
            std::sort(s.begin(), s.end());
            facets.push_back(std::move(s));
        } else {
            for (std::size_t u : x.upper_covers(v)) self(self, u);
        }
        path.pop_back();
    };
    for (std::size_t v : x.minimal_elements()) dfs(dfs, v);
    return SimplicialComplex::from_facets(facets);
}

Poset face_poset(const SimplicialComplex& k) {
    if (k.empty()) fail(ErrorCode::EmptyComplex, "face poset of the empty complex");
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int p = 0; p <= k.dim(); ++p) {
        for (const Simplex& s : k.simplices(p)) {
            ids.push_back(simplex_label(s));
            if (p == 0) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                covers.push_back({simplex_label(face), simplex_label(s)});
            }
        }
    }
    return Poset::from_covers(ids, covers);
}

}  // namespace posetmorse
