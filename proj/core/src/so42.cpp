#include "dynalg/so42.hpp"

#include "dynalg/errors.hpp"
#include "dynalg/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace dynalg::so42 {

using fock::Complex;
using fock::LadderKind;

namespace {

using Pauli = std::array<std::array<Complex, 2>, 2>;

const Pauli& pauli(int k) {
    static const std::array<Pauli, 3> sigma{{
        {{{0.0, 1.0}, {1.0, 0.0}}},
        {{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}},
        {{{1.0, 0.0}, {0.0, -1.0}}},
    }};
    return sigma.at(static_cast<std::size_t>(k - 1));
}

QComplex pauli_exact(int k, int i, int j) {
    const Complex c = pauli(k)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return {Rational(static_cast<long long>(c.real())), Rational(static_cast<long long>(c.imag()))};
}

constexpr std::array<int, 2> kPairA{0, 1};
constexpr std::array<int, 2> kPairB{2, 3};

// (a, b, c) cyclic in 1..3: J_ab uses sigma_c.
constexpr std::array<std::array<int, 3>, 3> kCyclic{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

SparseOperator hermitize(const SparseOperator& x) { return 0.5 * (x + x.adjoint()); }

class Ladders {
public:
    explicit Ladders(const BasisPtr& basis) {
        for (int k = 0; k < 4; ++k) {
            a_.push_back(fock::ladder(LadderKind::annihilate, k, basis));
            ad_.push_back(fock::ladder(LadderKind::create, k, basis));
        }
    }
    const SparseOperator& a(int k) const { return a_[static_cast<std::size_t>(k)]; }
    const SparseOperator& ad(int k) const { return ad_[static_cast<std::size_t>(k)]; }

    // x^+ sigma y, x and y mode pairs
    SparseOperator hop(const Pauli& s, const std::array<int, 2>& x, const std::array<int, 2>& y) const {
        SparseOperator out(a_.front().basis());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Complex c = s[std::size_t(i)][std::size_t(j)];
                if (c != Complex(0.0)) out += c * (ad(x[std::size_t(i)]) * a(y[std::size_t(j)]));
            }
        return out;
    }
    // x^+ sigma (y^+)^T
    SparseOperator create(const Pauli& s, const std::array<int, 2>& x, const std::array<int, 2>& y) const {
        SparseOperator out(a_.front().basis());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Complex c = s[std::size_t(i)][std::size_t(j)];
                if (c != Complex(0.0)) out += c * (ad(x[std::size_t(i)]) * ad(y[std::size_t(j)]));
            }
        return out;
    }
    // x sigma y^T (as a row times matrix times column, annihilators)
    SparseOperator annihilate(const Pauli& s, const std::array<int, 2>& x, const std::array<int, 2>& y) const {
        SparseOperator out(a_.front().basis());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Complex c = s[std::size_t(i)][std::size_t(j)];
                if (c != Complex(0.0)) out += c * (a(x[std::size_t(i)]) * a(y[std::size_t(j)]));
            }
        return out;
    }

private:
    std::vector<SparseOperator> a_;
    std::vector<SparseOperator> ad_;
};

}  // namespace

int MetricTensor::operator()(int a, int b) const {
    if (a < 1 || a > 6 || b < 1 || b > 6) throw InputError("MetricTensor: index out of range");
    return a == b ? diag[static_cast<std::size_t>(a - 1)] : 0;
}

const std::array<IndexPair, 15>& index_pairs() {
    static const std::array<IndexPair, 15> pairs = [] {
        std::array<IndexPair, 15> p{};
        std::size_t k = 0;
        for (int a = 1; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b) p[k++] = {a, b};
        return p;
    }();
    return pairs;
}

std::size_t GeneratorSet::slot(int a, int b) {
    if (a < 1 || b > 6 || a >= b) throw InputError("GeneratorSet: need 1 <= a < b <= 6");
    const auto& pairs = index_pairs();
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), IndexPair{a, b}) - pairs.begin());
}

GeneratorSet::GeneratorSet(BasisPtr basis, std::vector<SparseOperator> ops)
    : basis_(std::move(basis)), ops_(std::move(ops)) {
    if (ops_.size() != 15) throw InputError("GeneratorSet: expected 15 operators");
}

const SparseOperator& GeneratorSet::at(int a, int b) const { return ops_[slot(a, b)]; }

SparseOperator GeneratorSet::J(int a, int b) const {
    if (a == b) return SparseOperator::zero(basis_);
    if (a < b) return at(a, b);
    return -at(b, a);
}

SparseOperator GeneratorSet::L(int k) const {
    switch (k) {
        case 1: return J(2, 3);
        case 2: return J(3, 1);
        case 3: return J(1, 2);
        default: throw InputError("GeneratorSet::L: component must be 1..3");
    }
}

SparseOperator GeneratorSet::A(int k) const {
    if (k < 1 || k > 3) throw InputError("GeneratorSet::A: component must be 1..3");
    return J(k, 4);
}

GeneratorSet GeneratorSet::with_replaced(int a, int b, SparseOperator op) const {
    auto ops = ops_;
    ops[slot(a, b)] = std::move(op);
    return {basis_, std::move(ops)};
}

GeneratorSet build_generators(const BasisPtr& basis) {
    if (basis->modes() != 4) throw InputError("build_generators: basis must have four modes");
    const Ladders lad(basis);
    std::vector<SparseOperator> ops(15, SparseOperator::zero(basis));
    auto set = [&](int a, int b, SparseOperator op) {
        if (a < b)
            ops[GeneratorSet::slot(a, b)] = std::move(op);
        else
            ops[GeneratorSet::slot(b, a)] = -std::move(op);
    };
    auto get = [&](int a, int b) -> const SparseOperator& { return ops[GeneratorSet::slot(a, b)]; };

    for (const auto& [a, b, c] : kCyclic)
        set(a, b, 0.5 * (lad.hop(pauli(c), kPairA, kPairA) + lad.hop(pauli(c), kPairB, kPairB)));
    for (int a = 1; a <= 3; ++a)
        set(a, 4, -0.5 * (lad.hop(pauli(a), kPairA, kPairA) - lad.hop(pauli(a), kPairB, kPairB)));

    set(4, 5, 0.5 * (lad.create(pauli(2), kPairA, kPairB) - lad.annihilate(pauli(2), kPairA, kPairB)));
    SparseOperator total = SparseOperator::zero(basis);
    for (int k = 0; k < 4; ++k) total += fock::number(k, basis);
    set(5, 6, 0.5 * (total + 2.0 * SparseOperator::identity(basis)));

    const Complex i(0.0, 1.0);
    for (int a = 1; a <= 3; ++a) set(a, 5, hermitize(i * fock::commutator(get(a, 4), get(4, 5))));
    for (int a = 1; a <= 3; ++a) set(a, 6, hermitize(-i * fock::commutator(get(a, 5), get(5, 6))));
    set(4, 6, hermitize(-i * fock::commutator(get(4, 5), get(5, 6))));

    return {basis, std::move(ops)};
}

std::map<IndexPair, bilinear::BilinearForm> symbolic_generators() {
    using bilinear::BilinearForm;
    const QComplex half(make_rational(1, 2));
    const QComplex i = QComplex::i();

    auto hop = [&](int k, const std::array<int, 2>& x) {
        BilinearForm f;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) f.add_cross(x[std::size_t(r)], x[std::size_t(c)], pauli_exact(k, r, c));
        return f;
    };

    std::map<IndexPair, BilinearForm> out;
    auto set = [&](int a, int b, BilinearForm f) {
        if (a < b)
            out[{a, b}] = std::move(f);
        else
            out[{b, a}] = -std::move(f);
    };
    for (const auto& [a, b, c] : kCyclic) set(a, b, half * (hop(c, kPairA) + hop(c, kPairB)));
    for (int a = 1; a <= 3; ++a) set(a, 4, QComplex(make_rational(-1, 2)) * (hop(a, kPairA) - hop(a, kPairB)));

    BilinearForm j45;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const QComplex s = pauli_exact(2, r, c);
            if (s.is_zero()) continue;
            j45.add_create(kPairA[std::size_t(r)], kPairB[std::size_t(c)], half * s);
            j45.add_annih(kPairA[std::size_t(r)], kPairB[std::size_t(c)], -(half * s));
        }
    set(4, 5, j45);

    BilinearForm j56 = BilinearForm::scalar(1);
    for (int k = 0; k < 4; ++k) j56.add_cross(k, k, half);
    set(5, 6, j56);

    for (int a = 1; a <= 3; ++a) set(a, 5, i * bilinear::bilinear_bracket(out.at({a, 4}), out.at({4, 5})));
    for (int a = 1; a <= 3; ++a) set(a, 6, -i * bilinear::bilinear_bracket(out.at({a, 5}), out.at({5, 6})));
    set(4, 6, -i * bilinear::bilinear_bracket(out.at({4, 5}), out.at({5, 6})));
    return out;
}

SparseOperator constraint_operator(const BasisPtr& basis) {
    if (basis->modes() != 4) throw InputError("constraint_operator: basis must have four modes");
    return fock::number(0, basis) + fock::number(1, basis) - fock::number(2, basis) - fock::number(3, basis);
}

bool CommutatorReport::ok() const {
    return safe_states > 0 && !pairs.empty() &&
           std::all_of(pairs.begin(), pairs.end(), [](const PairResidual& p) { return p.pass; });
}

void CommutatorReport::throw_if_failed() const {
    for (const auto& p : pairs) {
        if (p.pass) continue;
        throw VerificationError("commutator [J" + std::to_string(p.left.first) + std::to_string(p.left.second) +
                                ", J" + std::to_string(p.right.first) + std::to_string(p.right.second) +
                                "] deviates by " + std::to_string(p.max_residual));
    }
}

nlohmann::json CommutatorReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pairs) {
        arr.push_back({{"pair",
                        "[J" + std::to_string(p.left.first) + std::to_string(p.left.second) + ",J" +
                            std::to_string(p.right.first) + std::to_string(p.right.second) + "]"},
                       {"max_residual", p.max_residual},
                       {"status", p.pass ? "pass" : "fail"}});
    }
    return {{"n_max", n_max}, {"safe_states", safe_states}, {"tol", tol}, {"pairs_checked", pairs.size()},
            {"max_residual", max_residual}, {"ok", ok()}, {"pairs", std::move(arr)}};
}

CommutatorReport verify_commutators(const GeneratorSet& g, const MetricTensor& metric, double tol,
                                    std::span<const int> indices, bool parallel) {
    std::vector<int> allowed(indices.begin(), indices.end());
    if (allowed.empty()) allowed = {1, 2, 3, 4, 5, 6};
    auto inside = [&](int x) { return std::find(allowed.begin(), allowed.end(), x) != allowed.end(); };

    std::vector<IndexPair> gens;
    for (const auto& p : index_pairs())
        if (inside(p.first) && inside(p.second)) gens.push_back(p);

    CommutatorReport report;
    report.tol = tol;
    report.n_max = g.basis()->n_max();
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = x + 1; y < gens.size(); ++y) report.pairs.push_back({gens[x], gens[y], 0.0, false});

    const auto safe = g.basis()->safe_indices(2);
    report.safe_states = safe.size();
    const Complex i(0.0, 1.0);
    parallel_for(
        report.pairs.size(),
        [&](std::size_t k) {
            auto& pr = report.pairs[k];
            const auto [a, b] = pr.left;
            const auto [c, d] = pr.right;
            const SparseOperator lhs = fock::commutator(g.at(a, b), g.at(c, d));
            SparseOperator rhs = SparseOperator::zero(g.basis());
            auto term = [&](int gv, int x, int y, double s) {
                if (gv != 0) rhs += (s * gv) * g.J(x, y);
            };
            term(metric(b, c), a, d, 1.0);
            term(metric(a, c), b, d, -1.0);
            term(metric(a, d), b, c, 1.0);
            term(metric(b, d), a, c, -1.0);
            rhs = i * rhs;
            pr.max_residual = fock::normalized_residual(lhs, rhs, safe);
            pr.pass = pr.max_residual < tol;
        },
        parallel);
    for (const auto& p : report.pairs) report.max_residual = std::max(report.max_residual, p.max_residual);
    return report;
}

std::size_t PhysicalSubspace::level_size(int n) const {
    auto it = levels.find(n);
    return it == levels.end() ? 0 : it->second.size();
}

PhysicalSubspace physical_subspace(const fock::FockBasis& basis) {
    if (basis.modes() != 4) throw InputError("physical_subspace: basis must have four modes");
    PhysicalSubspace out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& o = basis.state(i).occ;
        if (o[0] + o[1] != o[2] + o[3]) continue;
        out.indices.push_back(i);
        out.levels[o[0] + o[1] + 1].push_back(i);
    }
    return out;
}

nlohmann::json conventions() {
    return {
        {"pauli", "sigma1=[[0,1],[1,0]], sigma2=[[0,-i],[i,0]], sigma3=[[1,0],[0,-1]]"},
        {"metric", "diag(-1,-1,-1,-1,+1,+1)"},
        {"mode_pairs", "a=(a1,a2), b=(a3,a4)"},
        {"bracket_definitions", "J_a5=i[J_a4,J45], J_a6=-i[J_a5,J56], J46=-i[J45,J56] (taken literally)"},
        {"angular_momentum", "L1=J23, L2=J31, L3=J12, A_a=J_a4"},
        {"casimir_sums", "all ordered index assignments, J_ba=-J_ab, indices raised with g"},
        {"safe_subspace", "degree-d identities checked on total <= n_max - 2d"},
    };
}

}  // namespace dynalg::so42
