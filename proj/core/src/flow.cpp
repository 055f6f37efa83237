#include "posetmorse/flow.hpp"

#include <algorithm>
#include <cassert>

namespace posetmorse {

namespace {

struct CheckedInput {
    MorseReport report;
    Heights heights;
};

CheckedInput check_input(const Poset& x, const Matching& m) {
    if (!is_cellular(x)) fail(ErrorCode::NotCellular, "poset is not cellular");
    MorseReport report = morse_check(x, m);
    if (!report.is_matching || !report.is_acyclic)
        fail(ErrorCode::NotMorse, "not a Morse matching");
    if (!report.inadmissible_edges.empty())
        fail(ErrorCode::InadmissiblePair,
             "pair '" + report.inadmissible_edges.front().first + " -- " +
                 report.inadmissible_edges.front().second + "' is not homologically admissible");
    return {std::move(report), compute_heights(x)};
}

FlowData build_flow_impl(const Poset& x, const Matching& m, const GeneratorTable& gens,
                         const Heights& h) {
    FlowData data;
    data.complex = cellular_chain_complex(x, gens, /*augmented=*/true);
    const ChainComplex& c = data.complex;

    std::map<std::string, std::size_t> pos;  // position of each element in its degree basis
    for (int p = c.min_degree; p <= c.max_degree(); ++p)
        for (std::size_t i = 0; i < c.basis(p).size(); ++i) pos[c.basis(p)[i]] = i;

    const int degrees = c.max_degree() - c.min_degree + 1;
    data.vector_field.reserve(degrees);
    for (int p = c.min_degree; p <= c.max_degree(); ++p)
        data.vector_field.push_back(IntMatrix(c.rank(p + 1), c.rank(p)));

    for (const auto& [lo_id, hi_id] : m.pairs) {
        std::size_t lo = x.index_of(lo_id);
        Int eps = detail::incidence_unchecked(x, x.index_of(hi_id), lo, gens, h);
        data.vector_field[h.by_index[lo] - c.min_degree](pos.at(hi_id), pos.at(lo_id)) = -eps;
    }

    auto v_of = [&](int p) -> IntMatrix {
        int k = p - c.min_degree;
        if (k < 0 || k >= degrees) return IntMatrix(c.rank(p + 1), c.rank(p));
        return data.vector_field[k];
    };

    const std::size_t bound = x.size() * x.size();
    for (int p = c.min_degree; p <= c.max_degree(); ++p) {
        IntMatrix phi = IntMatrix::identity(c.rank(p));
        IntMatrix dv = c.differential(p + 1) * v_of(p);
        IntMatrix vd = v_of(p - 1) * c.differential(p);
        for (std::size_t i = 0; i < phi.rows(); ++i)
            for (std::size_t j = 0; j < phi.cols(); ++j) phi(i, j) += dv(i, j) + vd(i, j);
        data.flow.push_back(phi);

        IntMatrix power = phi;
        int steps = 1;
        for (;;) {
            IntMatrix next = power * phi;
            if (next == power) break;
            power = std::move(next);
            if (static_cast<std::size_t>(++steps) > bound)
                fail(ErrorCode::StabilizationOverrun,
                     "flow did not stabilize within the safety bound at degree " +
                         std::to_string(p));
        }
        data.flow_stable.push_back(std::move(power));
        data.stabilization_steps.push_back(steps);
    }
    return data;
}

const IntMatrix& degree_entry(const std::vector<IntMatrix>& v, const ChainComplex& c, int degree) {
    static const IntMatrix empty;
    int k = degree - c.min_degree;
    if (k < 0 || k >= static_cast<int>(v.size())) return empty;
    return v[k];
}

}  // namespace

const IntMatrix& FlowData::v_map(int degree) const {
    return degree_entry(vector_field, complex, degree);
}
const IntMatrix& FlowData::flow_map(int degree) const { return degree_entry(flow, complex, degree); }
const IntMatrix& FlowData::stable_map(int degree) const {
    return degree_entry(flow_stable, complex, degree);
}

FlowData build_flow(const Poset& x, const Matching& m) {
    CheckedInput in = check_input(x, m);
    GeneratorTable gens = GeneratorTable::build(x);
    return build_flow_impl(x, m, gens, in.heights);
}

FlowData build_flow(const Poset& x, const Matching& m, const GeneratorTable& gens) {
    CheckedInput in = check_input(x, m);
    return build_flow_impl(x, m, gens, in.heights);
}

namespace {

MorseComplexResult morse_complex_impl(const Poset& x, const Matching& m,
                                      const GeneratorTable& gens, const CheckedInput& in) {
    MorseComplexResult result;
    FlowData flow = build_flow_impl(x, m, gens, in.heights);
    const ChainComplex& c = flow.complex;

    const int top = c.max_degree();
    result.critical_basis.assign(top + 1, {});
    for (const std::string& id : in.report.critical)
        result.critical_basis[in.heights.by_index[x.index_of(id)]].push_back(id);
    result.critical_counts.assign(top + 1, 0);
    for (int p = 0; p <= top; ++p) result.critical_counts[p] = result.critical_basis[p].size();

    // Stable images of the critical cells span the flow-invariant chains;
    // collect them as column bases, one matrix per degree.
    std::map<std::string, std::size_t> pos;
    for (int p = c.min_degree; p <= top; ++p)
        for (std::size_t i = 0; i < c.basis(p).size(); ++i) pos[c.basis(p)[i]] = i;

    std::vector<IntMatrix> basis_mats;   // per degree from min_degree
    std::vector<SnfResult> basis_snf;
    for (int p = c.min_degree; p <= top; ++p) {
        const auto& labels = p < 0 ? c.basis(p) : result.critical_basis[p];
        IntMatrix b(c.rank(p), labels.size());
        for (std::size_t j = 0; j < labels.size(); ++j) {
            std::vector<Int> e(c.rank(p));
            e[pos.at(labels[j])] = 1;
            b.set_column(j, flow.stable_map(p).apply(e));
        }
        SnfResult snf = smith_normal_form(b);
        if (snf.rank != b.cols())
            fail(ErrorCode::BasisDegenerate,
                 "stable images of the critical cells are dependent at degree " +
                     std::to_string(p));
        basis_mats.push_back(std::move(b));
        basis_snf.push_back(std::move(snf));
    }

    ChainComplex restricted;
    restricted.augmented = true;
    restricted.min_degree = c.min_degree;
    restricted.bases.push_back(c.basis(-1));
    for (int p = 0; p <= top; ++p) restricted.bases.push_back(result.critical_basis[p]);

    restricted.differentials.push_back(IntMatrix(0, 1));
    for (int p = c.min_degree + 1; p <= top; ++p) {
        const IntMatrix& from = basis_mats[p - c.min_degree];
        IntMatrix d(restricted.rank(p - 1), restricted.rank(p));
        for (std::size_t j = 0; j < from.cols(); ++j) {
            std::vector<Int> image = c.differential(p).apply(from.column(j));
            auto coords = solve_integer(basis_snf[p - 1 - c.min_degree], image);
            if (!coords)
                fail(ErrorCode::BasisDegenerate,
                     "restricted differential is not integral over the stable basis at degree " +
                         std::to_string(p));
            d.set_column(j, *coords);
        }
        restricted.differentials.push_back(std::move(d));
    }
    restricted.validate();

    result.homology = homology(restricted);
    result.complex = std::move(restricted);
    return result;
}

}  // namespace

MorseComplexResult morse_complex(const Poset& x, const Matching& m) {
    CheckedInput in = check_input(x, m);
    GeneratorTable gens = GeneratorTable::build(x);
    return morse_complex_impl(x, m, gens, in);
}

MorseComplexResult morse_complex(const Poset& x, const Matching& m, const GeneratorTable& gens) {
    CheckedInput in = check_input(x, m);
    return morse_complex_impl(x, m, gens, in);
}

MorseInequalities morse_inequalities(const Poset& x, const Matching& m) {
    MorseReport report = morse_check(x, m);
    if (!report.is_matching || !report.is_acyclic)
        fail(ErrorCode::NotMorse, "not a Morse matching");
    Heights h = compute_heights(x);

    MorseInequalities out;
    const int top = std::max(h.poset_height, 0);
    out.critical_counts.assign(top + 1, 0);
    for (const std::string& id : report.critical)
        ++out.critical_counts[h.by_index[x.index_of(id)]];

    HomologySummary unreduced =
        homology(chain_complex(order_complex(x), /*augmented=*/false));
    out.betti.assign(top + 1, 0);
    for (const auto& [deg, g] : unreduced.groups) {
        if (deg >= 0 && deg <= top) out.betti[deg] = static_cast<long long>(g.betti);
        if (!g.torsion.empty()) out.torsion[deg] = g.torsion;
    }

    out.weak = true;
    for (int p = 0; p <= top; ++p)
        if (out.critical_counts[p] < out.betti[p]) out.weak = false;

    out.strong = true;
    for (int k = 0; k <= top; ++k) {
        long long sum = 0;
        for (int i = k; i >= 0; --i) {
            long long sign = ((k - i) % 2 == 0) ? 1 : -1;
            sum += sign * (out.critical_counts[i] - out.betti[i]);
        }
        if (sum < 0) out.strong = false;
    }

    long long euler = 0;
    for (int p = 0; p <= top; ++p) {
        long long sign = (p % 2 == 0) ? 1 : -1;
        euler += sign * (out.critical_counts[p] - out.betti[p]);
    }
    out.euler = euler == 0;
    return out;
}

}  // namespace posetmorse
