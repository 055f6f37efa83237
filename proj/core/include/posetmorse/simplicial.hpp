#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetmorse/numbers.hpp"
#include "posetmorse/poset.hpp"

namespace posetmorse {

/// A simplex is its sorted vertex-id list; comparison of these vectors gives
/// the lexicographic simplex order used for every basis.
using Simplex = std::vector<std::string>;

/// Sparse integer chain keyed by simplex. Map order == basis order.
using Chain = std::map<Simplex, Int>;

/// Signed simplicial boundary of a chain (alternating signs over sorted-vertex
/// omission). Purely combinatorial; does not consult any complex.
Chain boundary(const Chain& c);

std::string simplex_label(const Simplex& s);  // vertices joined by '.'

/// Finite abstract simplicial complex given by its facets. Construction
/// canonicalizes: vertices sorted, facets deduplicated with non-maximal
/// entries dropped, and the full simplex list per dimension enumerated in
/// lexicographic order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // empty complex

    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    bool empty() const { return vertices_.empty(); }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<Simplex>& simplices(int p) const;
    std::size_t simplex_count() const;
    std::optional<std::size_t> simplex_index(const Simplex& s) const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

private:
    std::vector<std::string> vertices_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<Simplex, std::size_t> index_;  // position within its dimension
};

/// Order complex: vertices are the poset's elements, facets its maximal chains.
SimplicialComplex order_complex(const Poset& x);

/// Face poset: one element per simplex (id = sorted vertex list joined by
/// '.'), covers the codimension-1 inclusions. Rejects the empty complex.
Poset face_poset(const SimplicialComplex& k);

}  // namespace posetmorse
