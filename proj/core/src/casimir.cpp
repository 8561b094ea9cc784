#include "dynalg/so42.hpp"

#include <algorithm>
#include <numeric>

namespace dynalg::so42 {

namespace {

int permutation_sign(const std::array<int, 6>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

}  // namespace

Casimirs casimirs(const GeneratorSet& g, const MetricTensor& metric) {
    const auto& basis = g.basis();
    auto raised = [&](int a, int b) { return static_cast<double>(metric.sign(a) * metric.sign(b)) * g.J(a, b); };

    // C1: each unordered pair appears twice, J_ba J^ba = J_ab J^ab.
    SparseOperator c1 = SparseOperator::zero(basis);
    for (const auto& [a, b] : index_pairs()) c1 += 2.0 * (g.at(a, b) * raised(a, b));

    // C2: the sum over all 720 index orders collapses to 8 times the sum
    // over ordered triples of disjoint sorted pairs.
    SparseOperator c2 = SparseOperator::zero(basis);
    const auto& pairs = index_pairs();
    for (const auto& p1 : pairs)
        for (const auto& p2 : pairs)
            for (const auto& p3 : pairs) {
                std::array<int, 6> perm{p1.first, p1.second, p2.first, p2.second, p3.first, p3.second};
                auto sorted = perm;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
                const double s = 8.0 * permutation_sign(perm);
                c2 += s * (raised(p1.first, p1.second) * (raised(p2.first, p2.second) * raised(p3.first, p3.second)));
            }

    // C3 = sum_{a,c} P_ac P_ca with P_ac = sum_b J_ab J^bc.
    std::vector<SparseOperator> p;
    p.reserve(36);
    for (int a = 1; a <= 6; ++a)
        for (int c = 1; c <= 6; ++c) {
            SparseOperator acc = SparseOperator::zero(basis);
            for (int b = 1; b <= 6; ++b) {
                if (b == a || b == c) continue;
                acc += g.J(a, b) * raised(b, c);
            }
            p.push_back(std::move(acc));
        }
    SparseOperator c3 = SparseOperator::zero(basis);
    for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c) c3 += p[std::size_t(a * 6 + c)] * p[std::size_t(c * 6 + a)];

    return {std::move(c1), std::move(c2), std::move(c3)};
}

}  // namespace dynalg::so42

namespace dynalg::so42 {

nlohmann::json EigenCheck::to_json() const {
    return {{"name", name},
            {"states", states},
            {"expected", expected},
            {"observed_min", observed_min},
            {"observed_max", observed_max},
            {"eigen_residual", eigen_residual},
            {"expected_residual", expected_residual}};
}

std::vector<EigenCheck> casimir_eigenvalues(const Casimirs& c, const std::vector<LabeledState>& states,
                                            const std::array<double, 3>& expected) {
    const std::array<const SparseOperator*, 3> ops{&c.c1, &c.c2, &c.c3};
    std::vector<EigenCheck> out;
    for (std::size_t k = 0; k < 3; ++k) {
        EigenCheck e;
        e.name = "C" + std::to_string(k + 1);
        e.expected = expected[k];
        e.states = states.size();
        bool first = true;
        for (const auto& s : states) {
            const fock::Vector w = fock::apply(*ops[k], s.vec);
            const double rq = s.vec.dot(w).real();
            e.observed_min = first ? rq : std::min(e.observed_min, rq);
            e.observed_max = first ? rq : std::max(e.observed_max, rq);
            first = false;
            e.eigen_residual = std::max(e.eigen_residual, (w - rq * s.vec).norm());
            e.expected_residual = std::max(e.expected_residual, (w - expected[k] * s.vec).norm());
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace dynalg::so42
