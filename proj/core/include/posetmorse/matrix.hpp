#pragma once

#include <cstddef>
#include <vector>

#include "posetmorse/numbers.hpp"

namespace posetmorse {

/// Dense integer matrix over arbitrary-precision integers. Row-major storage.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector

    std::vector<Int> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Int>& v);

    // Elementary operations (in place).
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row(std::size_t dst, std::size_t src, const Int& factor);  // row dst += factor * row src
    void add_col(std::size_t dst, std::size_t src, const Int& factor);  // col dst += factor * col src
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

}  // namespace posetmorse
