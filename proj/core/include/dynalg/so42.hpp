#pragma once

// so(4,2) on four boson modes: generators, commutation table, Casimirs,
// the constrained (physical) subspace and its (n, l, m) labeling.

#include "dynalg/bilinear.hpp"
#include "dynalg/fock.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dynalg::so42 {

using fock::BasisPtr;
using fock::SparseOperator;

/// diag(-1, -1, -1, -1, +1, +1), indices 1..6.
struct MetricTensor {
    std::array<int, 6> diag{-1, -1, -1, -1, 1, 1};

    [[nodiscard]] int operator()(int a, int b) const;
    [[nodiscard]] int sign(int a) const { return (*this)(a, a); }
    [[nodiscard]] bool is_standard() const { return diag == std::array<int, 6>{-1, -1, -1, -1, 1, 1}; }
};

/// Index pair (a, b) with 1 <= a < b <= 6.
using IndexPair = std::pair<int, int>;

/// The fifteen pairs in lexicographic order.
const std::array<IndexPair, 15>& index_pairs();

class GeneratorSet {
public:
    GeneratorSet(BasisPtr basis, std::vector<SparseOperator> ops);

    [[nodiscard]] const BasisPtr& basis() const { return basis_; }

    /// J_ab for a < b.
    [[nodiscard]] const SparseOperator& at(int a, int b) const;
    /// J_ab for any a, b, extended by J_ba = -J_ab and J_aa = 0.
    [[nodiscard]] SparseOperator J(int a, int b) const;

    /// L_k in the (J23, J31, J12) convention, k = 1..3.
    [[nodiscard]] SparseOperator L(int k) const;
    /// A_k = J_k4.
    [[nodiscard]] SparseOperator A(int k) const;

    [[nodiscard]] GeneratorSet with_replaced(int a, int b, SparseOperator op) const;

    static std::size_t slot(int a, int b);

private:
    BasisPtr basis_;
    std::vector<SparseOperator> ops_;
};

/// Pauli-matrix bilinears on the mode pairs (a1, a2), (a3, a4); J45 and
/// J56 in closed form; J_a5, J_a6, J46 through the bracket definitions.
GeneratorSet build_generators(const BasisPtr& basis);

/// The same fifteen operators as exact boson bilinears.
std::map<IndexPair, bilinear::BilinearForm> symbolic_generators();

/// N1 + N2 - N3 - N4.
SparseOperator constraint_operator(const BasisPtr& basis);

struct PairResidual {
    IndexPair left;
    IndexPair right;
    double max_residual = 0.0;
    bool pass = false;
};

struct CommutatorReport {
    std::vector<PairResidual> pairs;
    double tol = 0.0;
    double max_residual = 0.0;
    int n_max = 0;
    std::size_t safe_states = 0;

    [[nodiscard]] bool ok() const;
    /// Throws VerificationError naming the first failing pair.
    void throw_if_failed() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Checks [J_ab, J_cd] = i(g_bc J_ad - g_ac J_bd + g_ad J_bc - g_bd J_ac)
/// for every unordered pair of distinct generators whose indices all lie
/// in `indices` (default: all six), on states with total <= n_max - 4.
CommutatorReport verify_commutators(const GeneratorSet& g, const MetricTensor& metric, double tol,
                                    std::span<const int> indices = {}, bool parallel = false);

struct Casimirs {
    SparseOperator c1;
    SparseOperator c2;
    SparseOperator c3;
};

/// Quadratic, cubic (epsilon-contracted) and quartic (chain) invariants with
/// indices raised by the metric over all ordered index assignments.
Casimirs casimirs(const GeneratorSet& g, const MetricTensor& metric);

struct LabeledState;

struct EigenCheck {
    std::string name;
    double expected = 0.0;
    double observed_min = 0.0;     // Rayleigh quotients over the states
    double observed_max = 0.0;
    double eigen_residual = 0.0;   // max |C v - <v, C v> v|
    double expected_residual = 0.0; // max |C v - expected v|
    std::size_t states = 0;

    [[nodiscard]] bool ok(double tol) const { return states > 0 && expected_residual < tol; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Eigenvalue checks of C1, C2, C3 on the given states.
std::vector<EigenCheck> casimir_eigenvalues(const Casimirs& c, const std::vector<LabeledState>& states,
                                            const std::array<double, 3>& expected);

struct PhysicalSubspace {
    /// Fock indices with n1 + n2 = n3 + n4, in basis order.
    std::vector<std::size_t> indices;
    /// Level n (pair totals n - 1) -> Fock indices. Only complete levels.
    std::map<int, std::vector<std::size_t>> levels;

    [[nodiscard]] std::size_t level_size(int n) const;
    [[nodiscard]] int max_level() const { return levels.empty() ? 0 : levels.rbegin()->first; }
};

PhysicalSubspace physical_subspace(const fock::FockBasis& basis);

struct LabeledState {
    int n = 0;
    int l = 0;
    int m = 0;
    fock::Vector vec;

    /// Fock indices carrying weight above tol.
    [[nodiscard]] std::vector<std::size_t> support(double tol = 1e-12) const;
    [[nodiscard]] nlohmann::json to_json(const fock::FockBasis& basis) const;
};

/// Eigen clustering tolerance used in labeling.
inline constexpr double kClusterTolerance = 1e-8;

/// Simultaneous eigenbasis of {J56, L^2, L3} on the physical subspace, by
/// sequential restriction, for levels 1..max_level (default: every level
/// that fits under the cutoff). Sorted by (n, l, m).
std::vector<LabeledState> label_states(const GeneratorSet& g, std::optional<int> max_level = std::nullopt);

struct LabelCheck {
    double j56 = 0.0;         // max |J56 v - n v|
    double l_squared = 0.0;   // max |L^2 v - l(l+1) v|
    double l3 = 0.0;          // max |L3 v - m v|
    double j2_minus_k2 = 0.0; // max |(J^2 - K^2) v|
    double l_dot_a = 0.0;     // max |<v, L.A v>|
    double support = 0.0;     // weight outside n1+n2 = n3+n4 = n-1
    double orthonormality = 0.0;
    bool nondegenerate = false;

    [[nodiscard]] double worst() const;
};

LabelCheck check_labels(const GeneratorSet& g, const std::vector<LabeledState>& states);

/// Dimension of the span generated from the vacuum by J45 - J46 and the
/// six SO(4) generators, kept to levels <= n_target.
std::size_t orbit_span(const GeneratorSet& g, int n_target);

/// Conventions recorded in reports.
nlohmann::json conventions();

}  // namespace dynalg::so42
