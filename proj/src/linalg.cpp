#include "dgh/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace dgh {

Column Matrix::column(std::size_t c) const {
    Column v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::from_columns(const std::vector<Column>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
}

static std::vector<std::size_t> scan_order(std::size_t n, PivotOrder order) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (order == PivotOrder::reverse) std::reverse(idx.begin(), idx.end());
    return idx;
}

std::vector<std::size_t> rref(Matrix& m, PivotOrder order) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c : scan_order(m.cols(), order)) {
        if (row == m.rows()) break;
        std::size_t p = row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
        Scalar inv = 1 / m(row, c);
        for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0) continue;
            Scalar f = m(r, c);
            for (std::size_t k = 0; k < m.cols(); ++k)
                if (m(row, k) != 0) m(r, k) -= f * m(row, k);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Column> kernel(const Matrix& m0, PivotOrder order) {
    Matrix m = m0;
    auto pivots = rref(m, order);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Column> basis;
    for (std::size_t f : scan_order(m.cols(), order)) {
        if (is_pivot[f]) continue;
        Column v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Column> solve(const Matrix& a, const Column& b, PivotOrder order) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    // the augmented column must never be a pivot, so eliminate on A's columns only
    Matrix work = aug;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c : scan_order(a.cols(), order)) {
        if (row == work.rows()) break;
        std::size_t p = row;
        while (p < work.rows() && work(p, c) == 0) ++p;
        if (p == work.rows()) continue;
        if (p != row)
            for (std::size_t k = 0; k < work.cols(); ++k) std::swap(work(p, k), work(row, k));
        Scalar inv = 1 / work(row, c);
        for (std::size_t k = 0; k < work.cols(); ++k) work(row, k) *= inv;
        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r == row || work(r, c) == 0) continue;
            Scalar f = work(r, c);
            for (std::size_t k = 0; k < work.cols(); ++k)
                if (work(row, k) != 0) work(r, k) -= f * work(row, k);
        }
        pivots.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < work.rows(); ++r)
        if (work(r, a.cols()) != 0) return std::nullopt;
    Column x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = work(i, a.cols());
    return x;
}

std::vector<std::size_t> independent_columns(const Matrix& m0, PivotOrder order) {
    Matrix m = m0;
    auto piv = rref(m, order);
    std::sort(piv.begin(), piv.end());
    return piv;
}

}  // namespace dgh
