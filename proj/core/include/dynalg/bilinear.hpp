#pragma once

// Exact algebra of quadratic boson polynomials in four modes.

#include "dynalg/exact.hpp"
#include "dynalg/fock.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dynalg::bilinear {

inline constexpr int kModes = 4;

/// sum C_ij a_i^+ a_j + sum P_ij a_i^+ a_j^+ + sum R_ij a_i a_j + s,
/// with P and R symmetric. Mode indices are zero-based.
class BilinearForm {
public:
    using Coeffs = std::array<std::array<QComplex, kModes>, kModes>;

    BilinearForm() = default;

    static BilinearForm scalar(QComplex s);
    /// a_i^+ a_j
    static BilinearForm hop(int i, int j);
    /// (a_i^+ a_j + a_j a_i^+) / 2
    static BilinearForm mixer(int i, int j);
    /// a_i^+ a_j^+
    static BilinearForm create_pair(int i, int j);
    /// a_i a_j
    static BilinearForm annihilate_pair(int i, int j);

    [[nodiscard]] const QComplex& cross(int i, int j) const { return cross_[idx(i)][idx(j)]; }
    [[nodiscard]] const QComplex& pair_create(int i, int j) const { return pc_[idx(i)][idx(j)]; }
    [[nodiscard]] const QComplex& pair_annih(int i, int j) const { return pa_[idx(i)][idx(j)]; }
    [[nodiscard]] const QComplex& scalar_term() const { return scalar_; }

    /// Coefficient of the monomial a_i^+ a_j^+ as it would be written once
    /// (i <= j); equals P_ij + P_ji off the diagonal.
    [[nodiscard]] QComplex create_monomial(int i, int j) const;
    [[nodiscard]] QComplex annih_monomial(int i, int j) const;

    void add_cross(int i, int j, const QComplex& c);
    /// Adds c * a_i^+ a_j^+, keeping P symmetric.
    void add_create(int i, int j, const QComplex& c);
    void add_annih(int i, int j, const QComplex& c);
    void add_scalar(const QComplex& c) { scalar_ += c; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] BilinearForm adjoint() const;

    /// Real coordinates: 16 cross, 10 pair-create (i <= j), 10 pair-annih,
    /// 1 scalar; real parts then imaginary parts. Length 74.
    [[nodiscard]] std::vector<Rational> coordinates() const;
    static constexpr std::size_t kCoordinateCount = 2 * (16 + 10 + 10 + 1);

    [[nodiscard]] std::string to_string() const;

    BilinearForm& operator+=(const BilinearForm& o);
    BilinearForm& operator-=(const BilinearForm& o);
    BilinearForm& operator*=(const QComplex& s);

    friend BilinearForm operator+(BilinearForm a, const BilinearForm& b) { return a += b; }
    friend BilinearForm operator-(BilinearForm a, const BilinearForm& b) { return a -= b; }
    friend BilinearForm operator-(BilinearForm a) { return a *= QComplex(-1); }
    friend BilinearForm operator*(const QComplex& s, BilinearForm a) { return a *= s; }
    friend bool operator==(const BilinearForm& a, const BilinearForm& b);

private:
    static std::size_t idx(int i);

    Coeffs cross_{};
    Coeffs pc_{};
    Coeffs pa_{};
    QComplex scalar_{};
};

/// Exact commutator [X, Y] by normal ordering, scalar term included.
BilinearForm bilinear_bracket(const BilinearForm& x, const BilinearForm& y);

struct NamedForm {
    std::string label;
    BilinearForm form;
};

/// The 36 anti-Hermitian generators of sp(8,R), in this order:
///  mixers (i, j) row-major: i*M_ii, i*(M_ij + M_ji)/2 for i < j,
///  (M_ji - M_ij)/2 for i > j, with M_ij = mixer(i, j);
///  then for i <= j: i*(a_i^+a_j^+ + a_i a_j)/2, then (a_i^+a_j^+ - a_i a_j)/2.
/// Their real span is the real form in which the pair-number difference
/// generates a compact SO(2).
std::vector<NamedForm> sp8_basis();

/// Mixers M_ij row-major, pair creators, pair annihilators, with real
/// coefficients. Spans the split real form of the same complex algebra.
std::vector<NamedForm> sp8_split_basis();

/// i * ((N1 + N2) - (N3 + N4)) written through the symmetrized mixers.
BilinearForm pair_number_difference();

/// Hamiltonian p^T F u of the linear point transformation du = F u, with
/// u = (a + a^+)/sqrt2 and p = (a - a^+)/(i sqrt2).
BilinearForm point_transformation_generator(const std::array<std::array<Rational, kModes>, kModes>& f);

/// Abstract Lie algebra: [X_i, X_j] = sum_k c(i, j, k) X_k.
class StructureConstants {
public:
    struct Term {
        std::size_t k;
        Rational value;
    };

    StructureConstants(std::vector<std::string> labels, std::vector<Rational> dense);

    /// Algebra from a generator callback: bracket(i, j) returns the
    /// coordinate vector of [X_i, X_j].
    template <class F>
    static StructureConstants from_brackets(std::vector<std::string> labels, F&& bracket) {
        const std::size_t n = labels.size();
        std::vector<Rational> c(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto row = bracket(i, j);
                for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = std::move(row[k]);
            }
        return {std::move(labels), std::move(c)};
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    /// Nonzero entries of [X_i, X_j].
    [[nodiscard]] const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return nz_[i * dim_ + j]; }

    /// Bracket of two coordinate vectors.
    [[nodiscard]] std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

    [[nodiscard]] bool is_antisymmetric() const;
    /// Exact Jacobi identity on all basis triples.
    [[nodiscard]] bool satisfies_jacobi() const;

    [[nodiscard]] nlohmann::json to_json() const;
    static StructureConstants from_json(const nlohmann::json& j);

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;
    std::vector<std::vector<Term>> nz_;
};

/// Structure constants of the real span of `basis`. Throws InputError if
/// the forms are dependent and ClosureError naming the pair if a bracket
/// leaves the span.
StructureConstants structure_constants(const std::vector<NamedForm>& basis);

/// Real coordinates of x in the real span of basis, if it lies there.
std::optional<std::vector<Rational>> span_coordinates(const std::vector<NamedForm>& basis, const BilinearForm& x);

/// Matrix of the form on a four-mode Fock basis.
fock::SparseOperator realize(const BilinearForm& x, const fock::BasisPtr& basis);

}  // namespace dynalg::bilinear
