#pragma once

#include <map>
#include <string>
#include <vector>

#include "posetmorse/chain_complex.hpp"
#include "posetmorse/poset.hpp"

namespace posetmorse {

/// Chosen generator cycles: for each element of degree p >= 1, a generator of
/// the reduced (p-1)-homology of the order complex of its strict down-set,
/// normalized by the sphere_generator convention. Degree-0 elements follow the
/// formal (-1)-sphere convention and carry no stored chain. The table caches
/// the per-element homology coordinate solvers used by incidence computations;
/// generators may be negated to exercise gauge invariance.
class GeneratorTable {
public:
    struct Entry {
        int degree;                // degree of the element itself
        SimplicialComplex below;   // order complex of the strict down-set
        Chain generator;           // cycle in degree (degree - 1)
        HomologyCoordinates coords;
    };

    static GeneratorTable build(const Poset& x);

    bool contains(const std::string& id) const { return entries_.count(id) > 0; }
    const Chain& generator(const std::string& id) const { return entries_.at(id).generator; }
    const Entry& entry(const std::string& id) const { return entries_.at(id); }
    void negate(const std::string& id);

private:
    std::map<std::string, Entry> entries_;
};

/// Incidence number of a cover (lower, upper) in a cellular poset, via the
/// Mayer-Vietoris connecting morphism of the covering of the upper element's
/// strict down-set by (down-set minus lower) and the lower element's closed
/// down-set. Degree-1 covers use the two-endpoint convention: +1 on the
/// lexicographically first endpoint.
Int incidence(const Poset& x, const std::string& upper, const std::string& lower,
              const GeneratorTable& gens);

namespace detail {
/// Incidence without the cellularity re-check; callers have already verified it.
Int incidence_unchecked(const Poset& x, std::size_t upper, std::size_t lower,
                        const GeneratorTable& gens, const Heights& h);
}  // namespace detail

/// Cellular chain complex: one generator per element, graded by degree,
/// differential assembled from incidence numbers. Validates that the
/// differential squares to zero before returning. The augmented variant adds
/// the degree -1 augmentation sending every degree-0 element to 1.
ChainComplex cellular_chain_complex(const Poset& x, bool augmented = true);
ChainComplex cellular_chain_complex(const Poset& x, const GeneratorTable& gens,
                                    bool augmented = true);

struct SkeletonScanEntry {
    int skeleton_degree;
    int homology_degree;
    bool expect_zero;  // above the skeleton degree the group must vanish
    bool passed;
};

struct SkeletonScanReport {
    bool all_passed = true;
    std::vector<SkeletonScanEntry> checks;
};

/// Verifies that skeleton inclusions preserve homology below the skeleton
/// degree and that higher groups vanish.
SkeletonScanReport skeleton_homology_scan(const Poset& x);

}  // namespace posetmorse
