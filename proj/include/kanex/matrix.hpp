#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kanex/field.hpp"

namespace kanex {

/// Dense row-major matrix of exact scalars. Entries are kept canonical for
/// the field the matrix was built against; the matrix itself does not carry
/// the field, every arithmetic routine takes it explicitly.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix column(std::size_t j) const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b);
Matrix kronecker(const Field& k, const Matrix& a, const Matrix& b);
Matrix add(const Field& k, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& k, const Matrix& a, const Matrix& b);
Matrix scale(const Field& k, const Scalar& c, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Horizontal block concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);

struct Echelon
{
    /// Reduced row echelon form with the zero rows dropped (rank x cols).
    Matrix reduced;
    /// Pivot column of each row of `reduced`.
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot of each column is the first nonzero
/// entry at or below the current row.
Echelon rref(const Field& k, const Matrix& m);
std::size_t rank(const Field& k, const Matrix& m);

/// Columns form the standard null-space basis: one vector per non-pivot
/// column j, with a 1 at j and minus the reduced entries at the pivots.
Matrix nullspace(const Field& k, const Matrix& m);

/// Some X with a * X = b (free variables set to zero), or nullopt.
std::optional<Matrix> solve(const Field& k, const Matrix& a, const Matrix& b);

/// Incrementally maintained reduced row basis, for linear systems whose
/// equations arrive one at a time and far outnumber the unknowns.
class RowReducer
{
public:
    RowReducer(Field k, std::size_t unknowns) : k_(k), n_(unknowns) {}

    /// Adds an equation row (length = unknowns); returns true when it was independent.
    bool add_row(std::vector<Scalar> row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t unknowns() const { return n_; }
    /// Null-space basis of the accumulated system, same convention as `nullspace`.
    Matrix kernel() const;

private:
    Field k_;
    std::size_t n_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace kanex
