#include "posetmorse/chain_complex.hpp"

#include <cassert>

#include "posetmorse/errors.hpp"

namespace posetmorse {

std::size_t ChainComplex::rank(int degree) const {
    int k = degree - min_degree;
    if (k < 0 || k >= static_cast<int>(bases.size())) return 0;
    return bases[k].size();
}

const std::vector<std::string>& ChainComplex::basis(int degree) const {
    static const std::vector<std::string> none;
    int k = degree - min_degree;
    if (k < 0 || k >= static_cast<int>(bases.size())) return none;
    return bases[k];
}

IntMatrix ChainComplex::differential(int degree) const {
    int k = degree - min_degree;
    if (k < 0 || k >= static_cast<int>(differentials.size()))
        return IntMatrix(rank(degree - 1), rank(degree));
    return differentials[k];
}

void ChainComplex::validate() const {
    for (int p = min_degree; p <= max_degree(); ++p) {
        IntMatrix dd = differential(p) * differential(p + 1);
        if (!dd.is_zero())
            fail(ErrorCode::NotAComplex,
                 "differentials do not compose to zero at degree " + std::to_string(p + 1));
    }
}

bool HomologySummary::trivial() const {
    for (const auto& [deg, g] : groups)
        if (!g.trivial()) return false;
    return true;
}

HomologyGroup HomologySummary::group(int degree) const {
    auto it = groups.find(degree);
    if (it == groups.end()) return {};
    return it->second;
}

HomologySummary sphere_homology(int q) {
    HomologySummary s;
    s.reduced = true;
    if (q >= 0)
        for (int p = 0; p <= q; ++p) s.groups[p] = {};
    s.groups[q].betti = 1;
    return s;
}

ChainComplex chain_complex(const SimplicialComplex& k, bool augmented) {
    ChainComplex c;
    c.augmented = augmented;
    c.min_degree = augmented ? -1 : 0;

    if (augmented) c.bases.push_back({kEmptyCellLabel});
    for (int p = 0; p <= k.dim(); ++p) {
        std::vector<std::string> labels;
        for (const Simplex& s : k.simplices(p)) labels.push_back(simplex_label(s));
        c.bases.push_back(std::move(labels));
    }

    c.differentials.push_back(IntMatrix(0, c.bases.empty() ? 0 : c.bases[0].size()));
    for (int p = c.min_degree + 1; p <= c.max_degree(); ++p) {
        IntMatrix d(c.rank(p - 1), c.rank(p));
        if (p == 0) {
            for (std::size_t j = 0; j < c.rank(0); ++j) d(0, j) = 1;  // augmentation
        } else {
            const auto& cells = k.simplices(p);
            const auto& faces = k.simplices(p - 1);
            std::map<Simplex, std::size_t> face_index;
            for (std::size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = i;
            for (std::size_t j = 0; j < cells.size(); ++j) {
                const Simplex& s = cells[j];
                Int sign = 1;
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex face;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) face.push_back(s[i]);
                    d(face_index.at(face), j) = sign;
                    sign = -sign;
                }
            }
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

HomologySummary homology(const ChainComplex& c) {
    c.validate();
    HomologySummary out;
    out.reduced = c.augmented;
    for (int p = c.min_degree; p <= c.max_degree(); ++p) {
        std::size_t rank_out = integer_rank(c.differential(p));
        SnfResult in_snf = smith_normal_form(c.differential(p + 1));
        HomologyGroup g;
        g.betti = c.rank(p) - rank_out - in_snf.rank;
        for (const Int& v : in_snf.diagonal)
            if (v > 1) g.torsion.push_back(v);
        if (p >= 0 || !g.trivial()) out.groups[p] = std::move(g);
    }
    return out;
}

HomologyCoordinates::HomologyCoordinates(const IntMatrix& boundary_out,
                                         const IntMatrix& boundary_in) {
    chain_rank_ = boundary_out.cols();
    assert(boundary_in.rows() == chain_rank_);
    out_snf_ = smith_normal_form(boundary_out);
    kernel_rank_ = chain_rank_ - out_snf_.rank;

    // Image of the incoming differential written in kernel coordinates: the
    // first rank(d_p) rows of Vinv * d_(p+1) vanish because dd = 0.
    IntMatrix coords = out_snf_.right_inverse * boundary_in;
    IntMatrix quotient(kernel_rank_, boundary_in.cols());
    for (std::size_t i = 0; i < out_snf_.rank; ++i)
        for (std::size_t j = 0; j < boundary_in.cols(); ++j) assert(coords(i, j) == 0);
    for (std::size_t i = 0; i < kernel_rank_; ++i)
        for (std::size_t j = 0; j < boundary_in.cols(); ++j)
            quotient(i, j) = coords(out_snf_.rank + i, j);

    quot_snf_ = smith_normal_form(quotient);
    betti_ = kernel_rank_ - quot_snf_.rank;
    for (const Int& v : quot_snf_.diagonal)
        if (v > 1) torsion_.push_back(v);
}

std::vector<std::vector<Int>> HomologyCoordinates::free_generators() const {
    // Kernel basis columns of V composed with the quotient change of basis:
    // generator j is (kernel basis) * (column rank+j of Uq^-1).
    std::vector<std::vector<Int>> out;
    for (std::size_t j = quot_snf_.rank; j < kernel_rank_; ++j) {
        std::vector<Int> gen(chain_rank_);
        for (std::size_t t = 0; t < kernel_rank_; ++t) {
            const Int& coeff = quot_snf_.left_inverse(t, j);
            if (coeff == 0) continue;
            for (std::size_t r = 0; r < chain_rank_; ++r) {
                const Int& kb = out_snf_.right(r, out_snf_.rank + t);
                if (kb != 0) gen[r] += coeff * kb;
            }
        }
        out.push_back(std::move(gen));
    }
    return out;
}

std::optional<HomologyCoordinates::ClassCoords> HomologyCoordinates::class_coordinates(
    const std::vector<Int>& cycle) const {
    assert(cycle.size() == chain_rank_);
    std::vector<Int> y = out_snf_.right_inverse.apply(cycle);
    for (std::size_t i = 0; i < out_snf_.rank; ++i)
        if (y[i] != 0) return std::nullopt;  // not in the kernel

    std::vector<Int> kernel_coords(y.begin() + out_snf_.rank, y.end());
    std::vector<Int> u = quot_snf_.left.apply(kernel_coords);

    ClassCoords out;
    for (std::size_t i = 0; i < quot_snf_.rank; ++i) {
        const Int& factor = quot_snf_.diagonal[i];
        if (factor > 1) {
            Int r = u[i] % factor;
            if (r < 0) r += factor;
            out.torsion_residue.push_back(r);
        }
    }
    for (std::size_t i = quot_snf_.rank; i < kernel_rank_; ++i) out.free.push_back(u[i]);
    return out;
}

Chain sphere_generator(const SimplicialComplex& k, int p) {
    ChainComplex c = chain_complex(k, /*augmented=*/true);
    HomologyCoordinates hc(c.differential(p), c.differential(p + 1));
    if (hc.betti() != 1 || !hc.torsion().empty())
        fail(ErrorCode::NotInfiniteCyclic,
             "homology in degree " + std::to_string(p) + " is not infinite cyclic");

    std::vector<Int> gen = hc.free_generators()[0];
    const auto& cells = k.simplices(p);
    assert(gen.size() == cells.size());

    // Normalize: positive coefficient on the first supported simplex.
    for (const Int& v : gen) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : gen) w = -w;
        break;
    }

    Chain out;
    for (std::size_t i = 0; i < gen.size(); ++i)
        if (gen[i] != 0) out[cells[i]] = gen[i];
    return out;
}

}  // namespace posetmorse
