#pragma once

#include <map>
#include <string>
#include <vector>

#include "posetmorse/cellular.hpp"
#include "posetmorse/chain_complex.hpp"
#include "posetmorse/morse.hpp"
#include "posetmorse/poset.hpp"

namespace posetmorse {

/// Discrete gradient flow data over the augmented cellular chain complex.
/// Matrices are indexed by degree, aligned with complex.min_degree.
struct FlowData {
    ChainComplex complex;                 // augmented cellular complex
    std::vector<IntMatrix> vector_field;  // V_p : C_p -> C_(p+1)
    std::vector<IntMatrix> flow;          // phi_p = 1 + dV + Vd
    std::vector<IntMatrix> flow_stable;   // phi^N with phi^N = phi^(N+1)
    std::vector<int> stabilization_steps;

    const IntMatrix& v_map(int degree) const;
    const IntMatrix& flow_map(int degree) const;
    const IntMatrix& stable_map(int degree) const;
};

/// Builds V from the matching (matched element maps to minus the incidence
/// times its partner), assembles the flow, and iterates each degree to its
/// stable power. Requires a cellular poset and a homologically admissible
/// Morse matching; hitting the |X|^2 iteration bound is treated as a defect.
FlowData build_flow(const Poset& x, const Matching& m);
FlowData build_flow(const Poset& x, const Matching& m, const GeneratorTable& gens);

struct MorseComplexResult {
    std::vector<std::vector<std::string>> critical_basis;  // per degree 0..top
    std::vector<std::size_t> critical_counts;              // m_p
    ChainComplex complex;   // differential restricted to the stable critical basis
    HomologySummary homology;  // reduced
};

/// Morse chain complex on the stabilized-flow images of the critical cells,
/// with the differential expressed in that basis by exact integer solving.
MorseComplexResult morse_complex(const Poset& x, const Matching& m);
MorseComplexResult morse_complex(const Poset& x, const Matching& m, const GeneratorTable& gens);

struct MorseInequalities {
    std::vector<long long> critical_counts;  // m_p, indexed by height
    std::vector<long long> betti;            // unreduced Betti numbers of the order complex
    std::map<int, std::vector<Int>> torsion; // reported alongside, not used in verdicts
    bool weak = false;
    bool strong = false;
    bool euler = false;
};

/// Weak and strong Morse inequalities plus the Euler equality for a Morse
/// matching, comparing critical counts by height against unreduced Betti
/// numbers. Meaningful for any Morse matching, cellular or not.
MorseInequalities morse_inequalities(const Poset& x, const Matching& m);

}  // namespace posetmorse
