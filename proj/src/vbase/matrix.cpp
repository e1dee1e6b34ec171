#include "kanex/matrix.hpp"

#include <stdexcept>

namespace kanex {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::column(std::size_t j) const
{
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        c(i, 0) = (*this)(i, j);
    return c;
}

bool Matrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0)
            return false;
    return true;
}

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    Scalar t;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Scalar& x = a(i, l);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& y = b(l, j);
                if (sgn(y) == 0)
                    continue;
                t = x * y;
                c(i, j) += t;
            }
        }
    }
    if (!k.is_rational())
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                if (sgn(c(i, j)) != 0)
                    c(i, j) = k.canonical(c(i, j));
    return c;
}

Matrix kronecker(const Field& k, const Matrix& a, const Matrix& b)
{
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (sgn(x) == 0)
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    const Scalar& y = b(p, q);
                    if (sgn(y) == 0)
                        continue;
                    c(i * b.rows() + p, j * b.cols() + q) = k.mul(x, y);
                }
        }
    return c;
}

Matrix add(const Field& k, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shapes differ");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = k.add(a(i, j), b(i, j));
    return c;
}

Matrix subtract(const Field& k, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shapes differ");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = k.sub(a(i, j), b(i, j));
    return c;
}

Matrix scale(const Field& k, const Scalar& s, const Matrix& a)
{
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = k.mul(s, a(i, j));
    return c;
}

Matrix transpose(const Matrix& a)
{
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

Matrix hconcat(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hconcat: row counts differ");
    Matrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

Echelon rref(const Field& k, const Matrix& m)
{
    Matrix w = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        std::size_t p = row;
        while (p < w.rows() && sgn(w(p, col)) == 0)
            ++p;
        if (p == w.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < w.cols(); ++j)
                swap(w(p, j), w(row, j));
        Scalar inv = k.inv(w(row, col));
        support.clear();
        for (std::size_t j = col; j < w.cols(); ++j)
            if (sgn(w(row, j)) != 0) {
                w(row, j) = k.mul(w(row, j), inv);
                support.push_back(j);
            }
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == row || sgn(w(i, col)) == 0)
                continue;
            Scalar f = w(i, col);
            for (std::size_t j : support)
                w(i, j) = k.sub(w(i, j), k.mul(f, w(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix reduced(pivots.size(), w.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            reduced(i, j) = w(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Field& k, const Matrix& m)
{
    return rref(k, m).pivots.size();
}

namespace {

Matrix kernel_from_reduced(const Field& k, std::size_t n, const std::vector<std::size_t>& pivots,
                           const std::vector<const Scalar*>& reduced_rows)
{
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix basis(n, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        std::size_t j = free[f];
        basis(j, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Scalar& r = reduced_rows[i][j];
            if (sgn(r) != 0)
                basis(pivots[i], f) = k.neg(r);
        }
    }
    return basis;
}

} // namespace

Matrix nullspace(const Field& k, const Matrix& m)
{
    Echelon e = rref(k, m);
    std::vector<const Scalar*> rows;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        rows.push_back(&e.reduced(i, 0));
    return kernel_from_reduced(k, m.cols(), e.pivots, rows);
}

std::optional<Matrix> solve(const Field& k, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row counts differ");
    Echelon e = rref(k, hconcat(a, b));
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= a.cols())
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
    }
    return x;
}

bool RowReducer::add_row(std::vector<Scalar> row)
{
    if (row.size() != n_)
        throw std::invalid_argument("RowReducer: row length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = row[pivots_[i]];
        if (sgn(f) == 0)
            continue;
        const auto& r = rows_[i];
        for (std::size_t j = 0; j < n_; ++j)
            if (sgn(r[j]) != 0)
                row[j] = k_.sub(row[j], k_.mul(f, r[j]));
    }
    std::size_t p = 0;
    while (p < n_ && sgn(row[p]) == 0)
        ++p;
    if (p == n_)
        return false;
    Scalar inv = k_.inv(row[p]);
    for (std::size_t j = p; j < n_; ++j)
        if (sgn(row[j]) != 0)
            row[j] = k_.mul(row[j], inv);
    for (auto& r : rows_) {
        const Scalar f = r[p];
        if (sgn(f) == 0)
            continue;
        for (std::size_t j = p; j < n_; ++j)
            if (sgn(row[j]) != 0)
                r[j] = k_.sub(r[j], k_.mul(f, row[j]));
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

Matrix RowReducer::kernel() const
{
    std::vector<const Scalar*> rows;
    for (const auto& r : rows_)
        rows.push_back(r.data());
    return kernel_from_reduced(k_, n_, pivots_, rows);
}

} // namespace kanex
