#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgh/scalar.hpp"

namespace dgh {

using Column = std::vector<Scalar>;

// Small dense rational matrix; only used for elimination, never for storage of maps.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Column column(std::size_t c) const;
    static Matrix from_columns(const std::vector<Column>& cols, std::size_t rows);
    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

enum class PivotOrder { forward, reverse };

// Reduced row echelon form in place. Columns are scanned in the given order,
// so `reverse` yields a genuinely different choice of pivots.
std::vector<std::size_t> rref(Matrix& m, PivotOrder order = PivotOrder::forward);

std::size_t rank(Matrix m);
std::vector<Column> kernel(const Matrix& m, PivotOrder order = PivotOrder::forward);

// Some x with m x = b (free variables set to zero), or nothing.
std::optional<Column> solve(const Matrix& m, const Column& b,
                            PivotOrder order = PivotOrder::forward);

// Indices of a maximal independent subset of the columns, greedy in the given order.
std::vector<std::size_t> independent_columns(const Matrix& m,
                                             PivotOrder order = PivotOrder::forward);

}  // namespace dgh
