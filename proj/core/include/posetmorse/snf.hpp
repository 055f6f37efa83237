#pragma once

#include <optional>
#include <vector>

#include "posetmorse/matrix.hpp"

namespace posetmorse {

/// Smith decomposition left * m * right = diag(d1,...,dr,0,...) with both
/// transforms unimodular. Inverses are tracked alongside so homology
/// generators can be pulled back to chain coordinates.
struct SnfResult {
    std::vector<Int> diagonal;  // length min(rows, cols); nonnegative, d1 | d2 | ...
    std::size_t rank = 0;
    IntMatrix left;            // U
    IntMatrix left_inverse;    // U^-1
    IntMatrix right;           // V
    IntMatrix right_inverse;   // V^-1
    IntMatrix reduced;         // U * m * V
};

SnfResult smith_normal_form(const IntMatrix& m);

std::size_t integer_rank(const IntMatrix& m);

/// Exact solve of (original matrix) * x = b over the integers, given the
/// matrix's Smith decomposition. Empty optional when no integral solution
/// exists. Free coordinates (beyond the rank) are pinned to zero.
std::optional<std::vector<Int>> solve_integer(const SnfResult& snf, const std::vector<Int>& b);

}  // namespace posetmorse
