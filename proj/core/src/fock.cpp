#include "dynalg/fock.hpp"

#include "dynalg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace dynalg::fock {

int FockState::total() const {
    int t = 0;
    for (int n : occ) t += n;
    return t;
}

namespace {

// Lexicographically ordered compositions of `total` into `modes` parts.
void compositions(int modes, int total, std::vector<int>& prefix, std::vector<FockState>& out) {
    if (static_cast<int>(prefix.size()) == modes - 1) {
        prefix.push_back(total);
        out.push_back(FockState{prefix});
        prefix.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        prefix.push_back(k);
        compositions(modes, total - k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

FockBasis::FockBasis(int modes, int n_max) : modes_(modes), n_max_(n_max) {
    if (modes < 1) throw InputError("FockBasis: modes must be >= 1");
    if (n_max < 0) throw InputError("FockBasis: n_max must be >= 0");
    std::vector<int> prefix;
    for (int t = 0; t <= n_max; ++t) compositions(modes, t, prefix, states_);
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i].occ, i);
}

std::optional<std::size_t> FockBasis::index_of(const FockState& s) const {
    auto it = index_.find(s.occ);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FockBasis::index_of_checked(const FockState& s) const {
    auto i = index_of(s);
    if (!i) throw InputError("FockBasis: state not in basis");
    return *i;
}

std::vector<std::size_t> FockBasis::safe_indices(int degree) const {
    std::vector<std::size_t> out;
    const int limit = n_max_ - 2 * degree;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i].total() <= limit) out.push_back(i);
    return out;
}

Vector FockBasis::unit(const FockState& s) const {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(size()));
    v[static_cast<Eigen::Index>(index_of_checked(s))] = 1.0;
    return v;
}

BasisPtr enumerate_basis(int modes, int n_max) { return std::make_shared<const FockBasis>(modes, n_max); }

SparseOperator::SparseOperator(BasisPtr basis) : basis_(std::move(basis)) {
    if (!basis_) throw InputError("SparseOperator: null basis");
    const auto n = static_cast<Eigen::Index>(basis_->size());
    m_.resize(n, n);
}

SparseOperator::SparseOperator(BasisPtr basis, Matrix m) : basis_(std::move(basis)), m_(std::move(m)) {
    if (!basis_) throw InputError("SparseOperator: null basis");
    const auto n = static_cast<Eigen::Index>(basis_->size());
    if (m_.rows() != n || m_.cols() != n) throw InputError("SparseOperator: matrix does not match basis size");
    prune();
}

SparseOperator SparseOperator::identity(BasisPtr basis) {
    const auto n = static_cast<Eigen::Index>(basis->size());
    Matrix m(n, n);
    m.setIdentity();
    return {std::move(basis), std::move(m)};
}

void SparseOperator::prune() {
    m_.prune([](Eigen::Index, Eigen::Index, const Complex& v) { return std::abs(v) >= kDropTolerance; });
    m_.makeCompressed();
}

void SparseOperator::require_same_basis(const SparseOperator& o, const char* what) const {
    if (basis_ != o.basis_ && !(*basis_ == *o.basis_))
        throw InputError(std::string(what) + ": operators live on different bases");
}

Complex SparseOperator::coeff(std::size_t row, std::size_t col) const {
    if (row >= dim() || col >= dim()) throw InputError("SparseOperator::coeff: index out of range");
    return m_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

SparseOperator SparseOperator::adjoint() const {
    Matrix a = m_.adjoint();
    return {basis_, std::move(a)};
}

double SparseOperator::max_abs() const {
    double best = 0.0;
    for (Eigen::Index k = 0; k < m_.outerSize(); ++k)
        for (Matrix::InnerIterator it(m_, k); it; ++it) best = std::max(best, std::abs(it.value()));
    return best;
}

double SparseOperator::max_abs_on_columns(std::span<const std::size_t> cols) const {
    double best = 0.0;
    for (auto c : cols) {
        if (c >= dim()) throw InputError("max_abs_on_columns: column out of range");
        for (Matrix::InnerIterator it(m_, static_cast<Eigen::Index>(c)); it; ++it)
            best = std::max(best, std::abs(it.value()));
    }
    return best;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
    require_same_basis(o, "operator+");
    m_ = m_ + o.m_;
    prune();
    return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
    require_same_basis(o, "operator-");
    m_ = m_ - o.m_;
    prune();
    return *this;
}

SparseOperator& SparseOperator::operator*=(Complex s) {
    m_ *= s;
    prune();
    return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    a.require_same_basis(b, "operator*");
    SparseOperator::Matrix p = a.m_ * b.m_;
    return {a.basis_, std::move(p)};
}

nlohmann::json SparseOperator::to_json() const {
    struct Entry {
        Eigen::Index row, col;
        Complex v;
    };
    std::vector<Entry> entries;
    entries.reserve(nonzeros());
    for (Eigen::Index k = 0; k < m_.outerSize(); ++k)
        for (Matrix::InnerIterator it(m_, k); it; ++it) entries.push_back({it.row(), it.col(), it.value()});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return std::tie(x.row, x.col) < std::tie(y.row, y.col); });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) arr.push_back({e.row, e.col, e.v.real(), e.v.imag()});
    return {{"basis", {{"modes", basis_->modes()}, {"n_max", basis_->n_max()}}}, {"entries", std::move(arr)}};
}

SparseOperator SparseOperator::from_json(const nlohmann::json& j) {
    auto basis = enumerate_basis(j.at("basis").at("modes").get<int>(), j.at("basis").at("n_max").get<int>());
    const auto n = static_cast<Eigen::Index>(basis->size());
    std::vector<Eigen::Triplet<Complex>> trips;
    for (const auto& e : j.at("entries")) {
        const auto r = e.at(0).get<Eigen::Index>();
        const auto c = e.at(1).get<Eigen::Index>();
        if (r < 0 || c < 0 || r >= n || c >= n) throw InputError("SparseOperator::from_json: index out of range");
        trips.emplace_back(r, c, Complex(e.at(2).get<double>(), e.at(3).get<double>()));
    }
    Matrix m(n, n);
    m.setFromTriplets(trips.begin(), trips.end());
    return {std::move(basis), std::move(m)};
}

SparseOperator ladder(LadderKind kind, int mode, const BasisPtr& basis) {
    if (mode < 0 || mode >= basis->modes()) throw InputError("ladder: mode index out of range");
    const auto n = static_cast<Eigen::Index>(basis->size());
    std::vector<Eigen::Triplet<Complex>> trips;
    for (std::size_t col = 0; col < basis->size(); ++col) {
        FockState s = basis->state(col);
        int& k = s.occ[static_cast<std::size_t>(mode)];
        double amp = 0.0;
        if (kind == LadderKind::annihilate) {
            if (k == 0) continue;
            amp = std::sqrt(static_cast<double>(k));
            --k;
        } else {
            amp = std::sqrt(static_cast<double>(k + 1));
            ++k;
        }
        auto row = basis->index_of(s);
        if (!row) continue;  // beyond the cutoff
        trips.emplace_back(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col), amp);
    }
    SparseOperator::Matrix m(n, n);
    m.setFromTriplets(trips.begin(), trips.end());
    return {basis, std::move(m)};
}

SparseOperator number(int mode, const BasisPtr& basis) {
    if (mode < 0 || mode >= basis->modes()) throw InputError("number: mode index out of range");
    const auto n = static_cast<Eigen::Index>(basis->size());
    std::vector<Eigen::Triplet<Complex>> trips;
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const int k = basis->state(i).occ[static_cast<std::size_t>(mode)];
        if (k != 0) trips.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), double(k));
    }
    SparseOperator::Matrix m(n, n);
    m.setFromTriplets(trips.begin(), trips.end());
    return {basis, std::move(m)};
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }

Vector apply(const SparseOperator& a, const Vector& v) {
    if (static_cast<std::size_t>(v.size()) != a.dim()) throw InputError("apply: vector dimension mismatch");
    return a.matrix() * v;
}

double normalized_residual(const SparseOperator& a, const SparseOperator& b, std::span<const std::size_t> cols) {
    const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    return (a - b).max_abs_on_columns(cols) / scale;
}

bool is_hermitian(const SparseOperator& a, double tol) {
    return (a - a.adjoint()).max_abs() <= tol;
}

}  // namespace dynalg::fock
