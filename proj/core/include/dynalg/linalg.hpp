#pragma once

// Exact linear algebra over the rationals. Elimination is fraction-free
// (Bareiss) on integer-scaled rows; rational arithmetic only appears in
// back-substitution.

#include "dynalg/exact.hpp"

#include <optional>
#include <vector>

namespace dynalg::exact {

using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Matrix whose columns are the given vectors (all of equal length).
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t length);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t length);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Row echelon data: integer echelon form plus its pivot columns.
struct Echelon {
    std::vector<std::vector<BigInt>> rows;  // only the nonzero rows, in pivot order
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
};

Echelon echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> null_space(const Matrix& m);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace dynalg::exact

namespace dynalg::exact {

/// Repeated solves against one full-column-rank matrix. Picks a square
/// invertible row subset once and checks every candidate solution against
/// all rows, so an inconsistent right-hand side is always detected.
class ColumnSpaceSolver {
public:
    explicit ColumnSpaceSolver(const Matrix& m);

    [[nodiscard]] std::optional<Vector> solve(const Vector& b) const;
    [[nodiscard]] std::size_t dim() const { return m_.cols(); }

private:
    Matrix m_;
    std::vector<std::size_t> rows_;
    Matrix inverse_;  // inverse of m_ restricted to rows_
};

}  // namespace dynalg::exact
