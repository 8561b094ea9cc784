#include "dynalg/linalg.hpp"

#include "dynalg/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace dynalg::exact {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::vector<BigInt> integer_row(const Matrix& m, std::size_t r) {
    BigInt scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const BigInt& d = denominator(m(r, c));
        scale = boost::multiprecision::lcm(scale, d);
    }
    std::vector<BigInt> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Rational& q = m(r, c);
        row[c] = numerator(q) * (scale / denominator(q));
    }
    return row;
}

Vector back_substitute(const Echelon& e, std::size_t n, const std::vector<std::size_t>& free_values_at,
                       const Vector& free_values) {
    Vector x(n);
    for (std::size_t k = 0; k < free_values_at.size(); ++k) x[free_values_at[k]] = free_values[k];
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        const auto& row = e.rows[k];
        const std::size_t p = e.pivots[k];
        Rational acc = 0;
        for (std::size_t j = p + 1; j < n; ++j) {
            if (row[j] != 0 && x[j] != 0) acc += Rational(row[j]) * x[j];
        }
        x[p] = -acc / Rational(row[p]);
    }
    return x;
}

}  // namespace

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t length) {
    Matrix m(length, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != length) throw InputError("Matrix::from_columns: ragged input");
        for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t length) {
    Matrix m(rows.size(), length);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != length) throw InputError("Matrix::from_rows: ragged input");
        for (std::size_t c = 0; c < length; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Echelon echelon(const Matrix& m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::vector<BigInt>> a;
    a.reserve(nr);
    for (std::size_t r = 0; r < nr; ++r) a.push_back(integer_row(m, r));

    Echelon out;
    out.cols = nc;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(a[p], a[r]);
        const BigInt& piv = a[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            const BigInt lead = a[i][c];
            for (std::size_t j = c + 1; j < nc; ++j) {
                BigInt v = piv * a[i][j] - lead * a[r][j];
                if (v != 0) {
                    BigInt rem;
                    boost::multiprecision::divide_qr(v, prev, a[i][j], rem);
                    if (rem != 0) throw std::logic_error("Bareiss elimination: inexact division");
                } else {
                    a[i][j] = 0;
                }
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

std::vector<Vector> null_space(const Matrix& m) {
    const Echelon e = echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    std::vector<Vector> basis;
    basis.reserve(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        Vector values(free_cols.size());
        values[k] = 1;
        basis.push_back(back_substitute(e, n, free_cols, values));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw InputError("exact::solve: dimension mismatch");
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = -b[r];
    }
    const Echelon e = echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    std::vector<bool> is_pivot(n + 1, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    Vector values;
    for (std::size_t c = 0; c <= n; ++c) {
        if (is_pivot[c]) continue;
        free_cols.push_back(c);
        values.emplace_back(c == n ? 1 : 0);
    }
    Vector x = back_substitute(e, n + 1, free_cols, values);
    x.pop_back();
    return x;
}

ColumnSpaceSolver::ColumnSpaceSolver(const Matrix& m) : m_(m) {
    const std::size_t n = m.cols();
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    const Echelon e = echelon(t);
    if (e.pivots.size() != n) throw InputError("ColumnSpaceSolver: columns are linearly dependent");
    rows_ = e.pivots;

    Matrix square(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < n; ++c) square(k, c) = m(rows_[k], c);
    inverse_ = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vector unit(n);
        unit[k] = 1;
        auto col = exact::solve(square, unit);
        if (!col) throw std::logic_error("ColumnSpaceSolver: selected rows are singular");
        for (std::size_t r = 0; r < n; ++r) inverse_(r, k) = (*col)[r];
    }
}

std::optional<Vector> ColumnSpaceSolver::solve(const Vector& b) const {
    if (b.size() != m_.rows()) throw InputError("ColumnSpaceSolver::solve: dimension mismatch");
    const std::size_t n = m_.cols();
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r) {
        Rational acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& bk = b[rows_[k]];
            if (bk != 0 && inverse_(r, k) != 0) acc += inverse_(r, k) * bk;
        }
        x[r] = std::move(acc);
    }
    for (std::size_t r = 0; r < m_.rows(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (x[c] != 0 && m_(r, c) != 0) acc += m_(r, c) * x[c];
        if (acc != b[r]) return std::nullopt;
    }
    return x;
}

}  // namespace dynalg::exact
