#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetmorse/matrix.hpp"
#include "posetmorse/simplicial.hpp"
#include "posetmorse/snf.hpp"

namespace posetmorse {

/// Label used for the rank-1 degree -1 term of augmented complexes.
inline const std::string kEmptyCellLabel = "()";

/// Graded integer chain complex over ordered bases. Degrees run from
/// min_degree() (-1 when augmented) to max_degree().
struct ChainComplex {
    int min_degree = 0;
    bool augmented = false;
    std::vector<std::vector<std::string>> bases;   // bases[k] = degree min_degree + k
    std::vector<IntMatrix> differentials;          // differentials[k]: C_(min+k) -> C_(min+k-1)

    int max_degree() const { return min_degree + static_cast<int>(bases.size()) - 1; }
    std::size_t rank(int degree) const;
    const std::vector<std::string>& basis(int degree) const;
    IntMatrix differential(int degree) const;  // zero-shaped outside the range

    /// Throws NotAComplex unless consecutive differentials compose to zero.
    void validate() const;
};

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Int> torsion;  // ascending invariant factors > 1

    bool operator==(const HomologyGroup&) const = default;
    bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// Betti numbers and torsion per degree. Degrees 0..dim are always present;
/// degree -1 appears only when it is nonzero (reduced homology of the empty
/// complex).
struct HomologySummary {
    bool reduced = false;
    std::map<int, HomologyGroup> groups;

    bool operator==(const HomologySummary&) const = default;
    bool trivial() const;
    HomologyGroup group(int degree) const;  // zero group when absent
};

/// Reduced homology of a sphere of the given dimension (q = -1 means the
/// empty complex's formal sphere).
HomologySummary sphere_homology(int q);

/// Simplicial chain complex of a complex; the augmented variant appends the
/// degree -1 augmentation.
ChainComplex chain_complex(const SimplicialComplex& k, bool augmented);

HomologySummary homology(const ChainComplex& c);

/// Homology of a single degree with generator pullback: boundary_out = d_p,
/// boundary_in = d_(p+1). Exposes chain-space generators of the free part and
/// class coordinates of cycles, both deterministic.
class HomologyCoordinates {
public:
    HomologyCoordinates(const IntMatrix& boundary_out, const IntMatrix& boundary_in);

    std::size_t betti() const { return betti_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    std::vector<std::vector<Int>> free_generators() const;

    struct ClassCoords {
        std::vector<Int> free;             // coefficients on the free generators
        std::vector<Int> torsion_residue;  // residues mod the invariant factors > 1
    };
    /// Class of a cycle; empty optional when the vector is not in the kernel.
    std::optional<ClassCoords> class_coordinates(const std::vector<Int>& cycle) const;

private:
    std::size_t chain_rank_ = 0;
    std::size_t kernel_rank_ = 0;
    SnfResult out_snf_;   // of d_p
    SnfResult quot_snf_;  // of the image expressed in kernel coordinates
    std::size_t betti_ = 0;
    std::vector<Int> torsion_;
};

/// Deterministic generator of H_p(K) when that reduced group is infinite
/// cyclic: the representative cycle whose coefficient on the lexicographically
/// first supported simplex is positive. Throws NotInfiniteCyclic otherwise.
Chain sphere_generator(const SimplicialComplex& k, int p);

}  // namespace posetmorse
