#include "posetmorse/snf.hpp"

#include <cassert>
#include <cstdlib>

namespace posetmorse {

namespace {

// Pivot rule: smallest nonzero absolute value in the trailing submatrix,
// ties broken by row-major position. Deterministic over fast.
bool find_pivot(const IntMatrix& d, std::size_t from, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = from; i < d.rows(); ++i) {
        for (std::size_t j = from; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t nmin = rows < cols ? rows : cols;

    SnfResult res;
    res.reduced = m;
    res.left = IntMatrix::identity(rows);
    res.left_inverse = IntMatrix::identity(rows);
    res.right = IntMatrix::identity(cols);
    res.right_inverse = IntMatrix::identity(cols);

    IntMatrix& d = res.reduced;

    // Elementary operations applied to d together with the transform updates
    // that keep left * m * right == d and the inverses consistent.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        res.left.swap_rows(i, j);
        res.left_inverse.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        res.right.swap_cols(i, j);
        res.right_inverse.swap_rows(i, j);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        d.add_row(dst, src, k);
        res.left.add_row(dst, src, k);
        res.left_inverse.add_col(src, dst, -k);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        d.add_col(dst, src, k);
        res.right.add_col(dst, src, k);
        res.right_inverse.add_row(src, dst, -k);
    };
    auto row_negate = [&](std::size_t i) {
        d.negate_row(i);
        res.left.negate_row(i);
        res.left_inverse.negate_col(i);
    };

    for (std::size_t step = 0; step < nmin; ++step) {
        std::size_t pr = step, pc = step;
        if (!find_pivot(d, step, pr, pc)) break;  // trailing submatrix is zero

        for (;;) {
            row_swap(step, pr);
            col_swap(step, pc);

            bool dirty = false;
            for (std::size_t i = step + 1; i < rows; ++i) {
                if (d(i, step) == 0) continue;
                Int q = d(i, step) / d(step, step);
                row_add(i, step, -q);
                if (d(i, step) != 0) dirty = true;
            }
            for (std::size_t j = step + 1; j < cols; ++j) {
                if (d(step, j) == 0) continue;
                Int q = d(step, j) / d(step, step);
                col_add(j, step, -q);
                if (d(step, j) != 0) dirty = true;
            }

            if (!dirty) {
                // Lone pivot; pull in any entry it does not divide yet.
                bool fixed_up = false;
                for (std::size_t i = step + 1; i < rows && !fixed_up; ++i) {
                    for (std::size_t j = step + 1; j < cols && !fixed_up; ++j) {
                        if (d(i, j) % d(step, step) != 0) {
                            row_add(step, i, 1);
                            fixed_up = true;
                        }
                    }
                }
                if (!fixed_up) break;
            }

            bool ok = find_pivot(d, step, pr, pc);
            assert(ok);
            (void)ok;
        }

        if (d(step, step) < 0) row_negate(step);
    }

    res.diagonal.resize(nmin);
    for (std::size_t i = 0; i < nmin; ++i) {
        res.diagonal[i] = d(i, i);
        if (d(i, i) != 0) ++res.rank;
    }
    return res;
}

std::size_t integer_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

std::optional<std::vector<Int>> solve_integer(const SnfResult& snf, const std::vector<Int>& b) {
    assert(b.size() == snf.left.cols());
    const std::size_t n = snf.right.rows();
    std::vector<Int> c = snf.left.apply(b);
    std::vector<Int> y(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank) {
            if (c[i] % snf.diagonal[i] != 0) return std::nullopt;
            y[i] = c[i] / snf.diagonal[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.right.apply(y);
}

}  // namespace posetmorse
