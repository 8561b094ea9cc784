#include "dynalg/so42.hpp"

#include "dynalg/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace dynalg::so42 {

namespace {

using Dense = Eigen::MatrixXcd;

struct Cluster {
    double value;
    Dense vectors;  // columns in the ambient space
};

// Diagonalizes the restriction of op to span(cols(space)) and groups the
// eigenvectors by eigenvalue.
std::vector<Cluster> restrict_and_cluster(const SparseOperator& op, const Dense& space) {
    const Dense image = op.matrix() * space;
    Dense block = space.adjoint() * image;
    block = 0.5 * (block + block.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Dense> eig(block);
    if (eig.info() != Eigen::Success) throw LabelingError("label_states: eigensolver failed");
    const auto& w = eig.eigenvalues();
    const Dense u = space * eig.eigenvectors();

    std::vector<Cluster> out;
    Eigen::Index start = 0;
    for (Eigen::Index k = 1; k <= w.size(); ++k) {
        if (k < w.size() && std::abs(w[k] - w[k - 1]) < kClusterTolerance) continue;
        const double mean = w.segment(start, k - start).mean();
        out.push_back({mean, u.middleCols(start, k - start)});
        start = k;
    }
    return out;
}

int nearest_int(double x, double tol, const char* what) {
    const double r = std::round(x);
    if (std::abs(r - x) > tol) throw LabelingError(std::string("label_states: non-integral ") + what);
    return static_cast<int>(r);
}

SparseOperator l_squared(const GeneratorSet& g) {
    SparseOperator out = SparseOperator::zero(g.basis());
    for (int k = 1; k <= 3; ++k) out += g.L(k) * g.L(k);
    return out;
}

// Largest-magnitude component made real and positive.
void fix_phase(fock::Vector& v) {
    Eigen::Index best = 0;
    v.cwiseAbs().maxCoeff(&best);
    const fock::Complex c = v[best];
    v *= std::conj(c) / std::abs(c);
}

}  // namespace

std::vector<std::size_t> LabeledState::support(double tol) const {
    std::vector<std::size_t> out;
    for (Eigen::Index i = 0; i < vec.size(); ++i)
        if (std::abs(vec[i]) > tol) out.push_back(static_cast<std::size_t>(i));
    return out;
}

nlohmann::json LabeledState::to_json(const fock::FockBasis& basis) const {
    nlohmann::json sup = nlohmann::json::array();
    for (auto i : support()) sup.push_back(basis.state(i).occ);
    return {{"n", n}, {"l", l}, {"m", m}, {"support", std::move(sup)}};
}

std::vector<LabeledState> label_states(const GeneratorSet& g, std::optional<int> max_level) {
    const auto& basis = *g.basis();
    const PhysicalSubspace phys = physical_subspace(basis);
    const int top = max_level.value_or(phys.max_level());
    if (top > phys.max_level())
        throw InputError("label_states: level " + std::to_string(top) + " does not fit under n_max");

    std::vector<std::size_t> cols;
    for (const auto& [n, idx] : phys.levels)
        if (n <= top) cols.insert(cols.end(), idx.begin(), idx.end());

    Dense space = Dense::Zero(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) space(static_cast<Eigen::Index>(cols[k]), Eigen::Index(k)) = 1.0;

    const SparseOperator l2 = l_squared(g);
    const SparseOperator l3 = g.L(3);

    std::vector<LabeledState> out;
    for (const auto& level : restrict_and_cluster(g.at(5, 6), space)) {
        const int n = nearest_int(level.value, 1e-6, "J56 eigenvalue");
        for (const auto& lblock : restrict_and_cluster(l2, level.vectors)) {
            const double lf = (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, lblock.value))) / 2.0;
            const int l = nearest_int(lf, 1e-6, "angular momentum");
            for (const auto& mblock : restrict_and_cluster(l3, lblock.vectors)) {
                if (mblock.vectors.cols() != 1)
                    throw LabelingError("label_states: (n, l, m) = (" + std::to_string(n) + ", " + std::to_string(l) +
                                        ", " + std::to_string(mblock.value) + ") is degenerate");
                const int m = nearest_int(mblock.value, 1e-6, "magnetic number");
                fock::Vector v = mblock.vectors.col(0);
                v.normalize();
                fix_phase(v);
                out.push_back({n, l, m, std::move(v)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const LabeledState& x, const LabeledState& y) {
        return std::tie(x.n, x.l, x.m) < std::tie(y.n, y.l, y.m);
    });
    return out;
}

double LabelCheck::worst() const {
    return std::max({j56, l_squared, l3, j2_minus_k2, l_dot_a, support, orthonormality});
}

LabelCheck check_labels(const GeneratorSet& g, const std::vector<LabeledState>& states) {
    LabelCheck out;
    const auto& basis = *g.basis();
    const SparseOperator l2 = l_squared(g);
    SparseOperator j2 = SparseOperator::zero(g.basis());
    SparseOperator k2 = SparseOperator::zero(g.basis());
    SparseOperator la = SparseOperator::zero(g.basis());
    for (int k = 1; k <= 3; ++k) {
        const SparseOperator jk = 0.5 * (g.L(k) + g.A(k));
        const SparseOperator kk = 0.5 * (g.L(k) - g.A(k));
        j2 += jk * jk;
        k2 += kk * kk;
        la += g.L(k) * g.A(k);
    }
    const SparseOperator diff = j2 - k2;

    out.nondegenerate = true;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        const auto& v = s.vec;
        out.j56 = std::max(out.j56, (fock::apply(g.at(5, 6), v) - double(s.n) * v).norm());
        out.l_squared = std::max(out.l_squared, (fock::apply(l2, v) - double(s.l * (s.l + 1)) * v).norm());
        out.l3 = std::max(out.l3, (fock::apply(g.L(3), v) - double(s.m) * v).norm());
        out.j2_minus_k2 = std::max(out.j2_minus_k2, fock::apply(diff, v).norm());
        out.l_dot_a = std::max(out.l_dot_a, std::abs(v.dot(fock::apply(la, v))));
        double outside = 0.0;
        for (Eigen::Index k = 0; k < v.size(); ++k) {
            const auto& o = basis.state(static_cast<std::size_t>(k)).occ;
            if (o[0] + o[1] != s.n - 1 || o[2] + o[3] != s.n - 1) outside += std::norm(v[k]);
        }
        out.support = std::max(out.support, std::sqrt(outside));
        for (std::size_t j = i; j < states.size(); ++j) {
            const double target = i == j ? 1.0 : 0.0;
            out.orthonormality = std::max(out.orthonormality, std::abs(std::abs(v.dot(states[j].vec)) - target));
            if (j != i && states[j].n == s.n && states[j].l == s.l && states[j].m == s.m) out.nondegenerate = false;
        }
    }
    return out;
}

std::size_t orbit_span(const GeneratorSet& g, int n_target) {
    if (n_target < 1) throw InputError("orbit_span: n_target must be >= 1");
    const auto& basis = *g.basis();
    if (basis.n_max() < 2 * (n_target - 1) + 2)
        throw InputError("orbit_span: n_max must be >= 2(n_target - 1) + 2");

    std::vector<SparseOperator> ops{g.at(4, 5) - g.at(4, 6)};
    for (const auto& [a, b] : index_pairs())
        if (b <= 4) ops.push_back(g.at(a, b));

    const int max_total = 2 * (n_target - 1);
    auto truncate = [&](fock::Vector& w) {
        for (Eigen::Index k = 0; k < w.size(); ++k)
            if (basis.state(static_cast<std::size_t>(k)).total() > max_total) w[k] = 0.0;
    };

    std::vector<fock::Vector> span;
    std::size_t frontier = 0;
    auto add = [&](fock::Vector w) {
        const double scale = std::max(1.0, w.norm());
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : span) w -= q.dot(w) * q;
        if (w.norm() <= 1e-10 * scale) return;
        w.normalize();
        span.push_back(std::move(w));
    };

    add(basis.unit(fock::FockState{{0, 0, 0, 0}}));
    while (frontier < span.size()) {
        const fock::Vector q = span[frontier++];
        for (const auto& op : ops) {
            fock::Vector w = fock::apply(op, q);
            truncate(w);
            add(std::move(w));
        }
    }
    return span.size();
}

}  // namespace dynalg::so42
