#pragma once

// Truncated multimode boson Fock space and sparse operators on it.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <nlohmann/json.hpp>

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace dynalg::fock {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

/// Entries with magnitude below this are never stored.
inline constexpr double kDropTolerance = 1e-14;
/// Default tolerance for operator identity checks.
inline constexpr double kCompareTolerance = 1e-10;

struct FockState {
    std::vector<int> occ;

    [[nodiscard]] int total() const;
    [[nodiscard]] std::size_t modes() const { return occ.size(); }

    friend bool operator==(const FockState&, const FockState&) = default;
    friend auto operator<=>(const FockState&, const FockState&) = default;
};

/// All occupation vectors with total <= n_max, graded lexicographic order
/// (by total, then lexicographic on occ). The order is part of the contract.
class FockBasis {
public:
    FockBasis(int modes, int n_max);

    [[nodiscard]] int modes() const { return modes_; }
    [[nodiscard]] int n_max() const { return n_max_; }
    [[nodiscard]] std::size_t size() const { return states_.size(); }
    [[nodiscard]] const std::vector<FockState>& states() const { return states_; }
    [[nodiscard]] const FockState& state(std::size_t i) const { return states_.at(i); }
    [[nodiscard]] std::optional<std::size_t> index_of(const FockState& s) const;
    [[nodiscard]] std::size_t index_of_checked(const FockState& s) const;

    /// Indices of states on which a degree-`degree` identity is trustworthy:
    /// total <= n_max - 2*degree.
    [[nodiscard]] std::vector<std::size_t> safe_indices(int degree) const;

    [[nodiscard]] Vector unit(const FockState& s) const;

    friend bool operator==(const FockBasis& a, const FockBasis& b) {
        return a.modes_ == b.modes_ && a.n_max_ == b.n_max_;
    }

private:
    int modes_;
    int n_max_;
    std::vector<FockState> states_;
    std::map<std::vector<int>, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

BasisPtr enumerate_basis(int modes, int n_max);

/// Complex sparse linear map on a FockBasis. Immutable value type; all
/// arithmetic returns new operators with tiny entries pruned.
class SparseOperator {
public:
    using Matrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;

    explicit SparseOperator(BasisPtr basis);
    SparseOperator(BasisPtr basis, Matrix m);

    static SparseOperator zero(BasisPtr basis) { return SparseOperator(std::move(basis)); }
    static SparseOperator identity(BasisPtr basis);

    [[nodiscard]] const BasisPtr& basis() const { return basis_; }
    [[nodiscard]] const Matrix& matrix() const { return m_; }
    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] std::size_t nonzeros() const { return static_cast<std::size_t>(m_.nonZeros()); }

    [[nodiscard]] Complex coeff(std::size_t row, std::size_t col) const;
    [[nodiscard]] SparseOperator adjoint() const;
    [[nodiscard]] double max_abs() const;
    /// Largest |entry| among the given columns.
    [[nodiscard]] double max_abs_on_columns(std::span<const std::size_t> cols) const;
    [[nodiscard]] bool is_zero() const { return m_.nonZeros() == 0; }

    SparseOperator& operator+=(const SparseOperator& o);
    SparseOperator& operator-=(const SparseOperator& o);
    SparseOperator& operator*=(Complex s);

    friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
    friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
    friend SparseOperator operator-(SparseOperator a) { return a *= Complex(-1.0); }
    friend SparseOperator operator*(Complex s, SparseOperator a) { return a *= s; }
    friend SparseOperator operator*(double s, SparseOperator a) { return a *= Complex(s); }
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

    [[nodiscard]] nlohmann::json to_json() const;
    static SparseOperator from_json(const nlohmann::json& j);

private:
    void prune();
    void require_same_basis(const SparseOperator& o, const char* what) const;

    BasisPtr basis_;
    Matrix m_;
};

enum class LadderKind { annihilate, create };

SparseOperator ladder(LadderKind kind, int mode, const BasisPtr& basis);

/// a_mode^dagger a_mode
SparseOperator number(int mode, const BasisPtr& basis);

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

Vector apply(const SparseOperator& a, const Vector& v);

/// max |(A - B) e_c| over the given columns, divided by max(1, largest
/// magnitude in A or B).
double normalized_residual(const SparseOperator& a, const SparseOperator& b, std::span<const std::size_t> cols);

bool is_hermitian(const SparseOperator& a, double tol = 0.0);

}  // namespace dynalg::fock
