#include "doctest.h"
#include "oracles.hpp"

#include "dynalg/errors.hpp"
#include "dynalg/so42.hpp"

#include <set>

using namespace dynalg;
using namespace dynalg::so42;

namespace {

const GeneratorSet& generators(int n_max) {
    static std::map<int, GeneratorSet> cache;
    auto it = cache.find(n_max);
    if (it == cache.end()) it = cache.emplace(n_max, build_generators(fock::enumerate_basis(4, n_max))).first;
    return it->second;
}

}  // namespace

TEST_CASE("metric and index pairs") {
    const MetricTensor g;
    CHECK(g.is_standard());
    CHECK(g(1, 1) == -1);
    CHECK(g(6, 6) == 1);
    CHECK(g(1, 2) == 0);
    const auto& pairs = index_pairs();
    CHECK(pairs.front() == IndexPair{1, 2});
    CHECK(pairs.back() == IndexPair{5, 6});
    for (std::size_t k = 1; k < pairs.size(); ++k) CHECK(pairs[k - 1] < pairs[k]);
}

TEST_CASE("generator examples") {
    const auto& g = generators(8);
    const auto& basis = *g.basis();
    const fock::Vector vac = basis.unit(fock::FockState{{0, 0, 0, 0}});
    CHECK((fock::apply(g.at(5, 6), vac) - vac).norm() < 1e-14);

    const auto cols = basis.safe_indices(2);
    CHECK(fock::normalized_residual(fock::commutator(g.at(1, 2), g.at(2, 3)), fock::Complex(0, 1) * g.J(3, 1), cols) < 1e-10);
    CHECK(fock::commutator(g.at(1, 2), g.at(3, 4)).max_abs_on_columns(cols) < 1e-12);

    const fock::Vector up = fock::apply(g.at(4, 5), vac);
    double level2 = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis.state(i).total() == 2) level2 += std::norm(up[static_cast<Eigen::Index>(i)]);
    CHECK(level2 > 0.1);

    for (const auto& [a, b] : index_pairs()) CHECK(fock::is_hermitian(g.at(a, b)));
    CHECK((g.J(2, 1) + g.at(1, 2)).is_zero());
    CHECK(g.J(3, 3).is_zero());
    CHECK((g.L(3) - g.at(1, 2)).is_zero());
    CHECK((g.L(2) - g.J(3, 1)).is_zero());
    CHECK((g.A(2) - g.at(2, 4)).is_zero());
    CHECK_THROWS_AS((void)g.at(2, 1), InputError);
    CHECK_THROWS_AS(build_generators(fock::enumerate_basis(3, 4)), InputError);
}

TEST_CASE("number shifts") {
    const auto& g = generators(6);
    const auto& basis = *g.basis();
    for (const auto& [a, b] : index_pairs()) {
        const auto& m = g.at(a, b).matrix();
        std::set<int> shifts;
        for (int k = 0; k < m.outerSize(); ++k)
            for (fock::SparseOperator::Matrix::InnerIterator it(m, k); it; ++it)
                shifts.insert(basis.state(static_cast<std::size_t>(it.row())).total() -
                              basis.state(static_cast<std::size_t>(it.col())).total());
        if (b <= 4 || (a == 5 && b == 6))
            CHECK(shifts == std::set<int>{0});
        else
            CHECK(shifts == std::set<int>{-2, 2});
    }
}

TEST_CASE("every generator commutes with the constraint") {
    const auto& g = generators(8);
    const auto z = constraint_operator(g.basis());
    const auto cols = g.basis()->safe_indices(2);
    for (const auto& [a, b] : index_pairs()) CHECK(fock::commutator(g.at(a, b), z).max_abs_on_columns(cols) < 1e-12);
}

TEST_CASE("commutation table") {
    const auto& g = generators(8);
    const auto rep = verify_commutators(g, MetricTensor{}, 1e-10);
    CHECK(rep.pairs.size() == 105);
    CHECK(rep.ok());
    CHECK(rep.max_residual < 1e-12);
    CHECK(rep.safe_states == fock::enumerate_basis(4, 4)->size());
    CHECK_NOTHROW(rep.throw_if_failed());
    CHECK(rep.to_json()["pairs"].size() == 105);

    const auto par = verify_commutators(g, MetricTensor{}, 1e-10, {}, true);
    CHECK(par.max_residual == rep.max_residual);

    const std::array<int, 3> sub{1, 2, 3};
    CHECK(verify_commutators(g, MetricTensor{}, 1e-10, sub).pairs.size() == 3);

    const auto broken = g.with_replaced(4, 5, -1.0 * g.at(4, 5));
    const auto bad = verify_commutators(broken, MetricTensor{}, 1e-10);
    CHECK_FALSE(bad.ok());
    CHECK_THROWS_AS(bad.throw_if_failed(), VerificationError);

    MetricTensor wrong;
    wrong.diag = {1, 1, 1, 1, 1, 1};
    CHECK_FALSE(verify_commutators(g, wrong, 1e-10).ok());
}

TEST_CASE("physical subspace") {
    const auto basis = fock::enumerate_basis(4, 8);
    const auto p = physical_subspace(*basis);
    CHECK(p.indices.size() == 55);
    CHECK(p.level_size(1) == 1);
    CHECK(p.level_size(3) == 9);
    CHECK(p.max_level() == 5);
    for (int n = 1; n <= 5; ++n) CHECK(p.level_size(n) == static_cast<std::size_t>(n * n));
    for (auto i : p.indices) {
        const auto& o = basis->state(i).occ;
        CHECK(o[0] + o[1] == o[2] + o[3]);
    }
    CHECK(physical_subspace(*fock::enumerate_basis(4, 7)).max_level() == 4);
}

TEST_CASE("state labeling") {
    const auto& g = generators(8);
    const auto states = label_states(g);
    REQUIRE(states.size() == 55);
    CHECK(states[0].n == 1);
    CHECK(states[0].l == 0);
    CHECK(states[0].m == 0);
    std::vector<std::tuple<int, int, int>> level2;
    for (const auto& s : states)
        if (s.n == 2) level2.emplace_back(s.n, s.l, s.m);
    CHECK(level2 == std::vector<std::tuple<int, int, int>>{{2, 0, 0}, {2, 1, -1}, {2, 1, 0}, {2, 1, 1}});

    std::set<std::tuple<int, int, int>> seen;
    for (const auto& s : states) {
        CHECK(s.l < s.n);
        CHECK(std::abs(s.m) <= s.l);
        CHECK(seen.insert({s.n, s.l, s.m}).second);
        CHECK(s.vec.norm() == doctest::Approx(1.0));
    }

    const auto check = check_labels(g, states);
    CHECK(check.nondegenerate);
    CHECK(check.worst() < 1e-8);
    CHECK(check.l_dot_a < 1e-10);
    CHECK(check.j2_minus_k2 < 1e-10);
    CHECK(check.support < 1e-12);

    const auto j = states[1].to_json(*g.basis());
    CHECK(j["n"] == 2);
    CHECK(!j["support"].empty());
    CHECK(label_states(g, 3).size() == 14);
}

TEST_CASE("orbit of the vacuum") {
    const auto& g = generators(8);
    CHECK(orbit_span(g, 1) == 1);
    CHECK(orbit_span(g, 2) == 5);
    CHECK(orbit_span(g, 3) == 14);
    CHECK(orbit_span(g, 4) == 30);
    CHECK_THROWS_AS(orbit_span(generators(6), 4), InputError);
}

TEST_CASE("Casimir operators against the literal sums") {
    const auto& g = generators(10);
    const auto c = casimirs(g, MetricTensor{});
    const auto states = label_states(g, 2);
    for (const auto& s : states) {
        CHECK((fock::apply(c.c1, s.vec) - oracle::c1_literal(g, s.vec)).norm() < 1e-9);
        CHECK((fock::apply(c.c2, s.vec) - oracle::c2_literal(g, s.vec)).norm() < 1e-9);
        CHECK((fock::apply(c.c3, s.vec) - oracle::c3_literal(g, s.vec)).norm() < 1e-9);
    }
    CHECK(fock::is_hermitian(c.c1, 1e-10));
    CHECK(fock::is_hermitian(c.c3, 1e-10));

    const auto cols = g.basis()->safe_indices(3);
    for (const auto& [a, b] : index_pairs()) CHECK(fock::commutator(c.c1, g.at(a, b)).max_abs_on_columns(cols) < 1e-9);
}

TEST_CASE("Casimir eigenvalues on the physical states") {
    // values produced by the literal contractions with this metric
    const auto& g = generators(14);
    const auto states = label_states(g, 4);
    REQUIRE(states.size() == 30);
    const auto c = casimirs(g, MetricTensor{});
    const auto eig = casimir_eigenvalues(c, states, {-6.0, 0.0, -18.0});
    REQUIRE(eig.size() == 3);
    for (const auto& e : eig) {
        CHECK(e.states == 30);
        CHECK(e.eigen_residual < 1e-8);
        CHECK(e.ok(1e-8));
    }
    CHECK(eig[0].observed_min == doctest::Approx(-6.0));
    CHECK(eig[2].observed_max == doctest::Approx(-18.0));
    CHECK_FALSE(casimir_eigenvalues(c, states, {6.0, 0.0, -12.0})[0].ok(1e-8));
}

TEST_CASE("conventions") {
    const auto j = conventions();
    CHECK(j.contains("pauli"));
    CHECK(j["metric"] == "diag(-1,-1,-1,-1,+1,+1)");
}
