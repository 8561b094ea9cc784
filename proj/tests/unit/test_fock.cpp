#include "doctest.h"
#include "oracles.hpp"

#include "dynalg/errors.hpp"
#include "dynalg/fock.hpp"

using namespace dynalg;
using namespace dynalg::fock;

TEST_CASE("basis sizes") {
    CHECK(enumerate_basis(1, 2)->size() == 3);
    CHECK(enumerate_basis(4, 0)->size() == 1);
    CHECK(enumerate_basis(4, 2)->size() == 15);
    CHECK(enumerate_basis(4, 10)->size() == 1001);
    CHECK(enumerate_basis(4, 14)->size() == 3060);
    for (int m = 1; m <= 5; ++m)
        for (int n = 0; n <= 6; ++n) CHECK(BigInt(enumerate_basis(m, n)->size()) == oracle::binomial(n + m, m));
}

TEST_CASE("basis order is graded lexicographic") {
    for (int m : {1, 2, 4})
        for (int n : {0, 3, 5}) {
            const auto basis = enumerate_basis(m, n);
            const auto ref = oracle::brute_basis(m, n);
            REQUIRE(basis->size() == ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(basis->state(i).occ == ref[i]);
                CHECK(basis->index_of_checked(basis->state(i)) == i);
            }
        }
    CHECK(enumerate_basis(4, 6)->states() == enumerate_basis(4, 6)->states());
    CHECK_FALSE(enumerate_basis(2, 2)->index_of(FockState{{3, 0}}).has_value());
    CHECK_THROWS_AS(enumerate_basis(0, 2), InputError);
}

TEST_CASE("ladder operators") {
    const auto basis = enumerate_basis(4, 6);
    const Vector vac = basis->unit(FockState{{0, 0, 0, 0}});
    const auto a1 = ladder(LadderKind::annihilate, 0, basis);
    const auto c1 = ladder(LadderKind::create, 0, basis);

    CHECK(fock::apply(a1, vac).norm() == 0.0);
    CHECK(vac.dot(fock::apply(a1 * c1, vac)).real() == doctest::Approx(1.0));
    const Vector one = basis->unit(FockState{{1, 0, 0, 0}});
    CHECK((fock::apply(c1, vac) - one).norm() == 0.0);

    // sqrt(n) amplitudes
    const Vector three = basis->unit(FockState{{0, 3, 0, 0}});
    const Vector two = basis->unit(FockState{{0, 2, 0, 0}});
    CHECK((fock::apply(ladder(LadderKind::annihilate, 1, basis), three) - std::sqrt(3.0) * two).norm() < 1e-15);

    const auto cols = basis->safe_indices(1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto ai = ladder(LadderKind::annihilate, i, basis);
            const auto cj = ladder(LadderKind::create, j, basis);
            const auto expected = i == j ? SparseOperator::identity(basis) : SparseOperator::zero(basis);
            CHECK(normalized_residual(commutator(ai, cj), expected, cols) < kCompareTolerance);
            CHECK(commutator(ai, ladder(LadderKind::annihilate, j, basis)).is_zero());
        }

    for (int i = 0; i < 4; ++i) {
        const auto a = ladder(LadderKind::annihilate, i, basis);
        const auto c = ladder(LadderKind::create, i, basis);
        CHECK((c - a.adjoint()).is_zero());
        CHECK(is_hermitian(c * a));
        CHECK(normalized_residual(c * a, number(i, basis), std::vector<std::size_t>{}) == 0.0);
    }
    CHECK_THROWS_AS(ladder(LadderKind::create, 4, basis), InputError);
    CHECK_THROWS_AS(ladder(LadderKind::create, -1, basis), InputError);
}

TEST_CASE("create drops transitions above the cutoff") {
    const auto basis = enumerate_basis(2, 3);
    const auto c = ladder(LadderKind::create, 0, basis);
    CHECK(fock::apply(c, basis->unit(FockState{{3, 0}})).norm() == 0.0);
    CHECK(fock::apply(c, basis->unit(FockState{{1, 2}})).norm() == 0.0);
}

TEST_CASE("commutator and apply") {
    const auto basis = enumerate_basis(4, 6);
    const auto h12 = ladder(LadderKind::create, 0, basis) * ladder(LadderKind::annihilate, 1, basis);
    const auto h21 = ladder(LadderKind::create, 1, basis) * ladder(LadderKind::annihilate, 0, basis);
    CHECK(commutator(h12, h12).is_zero());
    const auto cols = basis->safe_indices(2);
    CHECK(normalized_residual(commutator(h12, h21), number(0, basis) - number(1, basis), cols) < kCompareTolerance);

    const auto a1 = ladder(LadderKind::annihilate, 0, basis);
    const auto c1 = ladder(LadderKind::create, 0, basis);
    CHECK(normalized_residual(commutator(a1, c1), SparseOperator::identity(basis), basis->safe_indices(1)) <
          kCompareTolerance);

    Vector v = Vector::Zero(static_cast<Eigen::Index>(basis->size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(std::sin(1.0 + i), std::cos(2.0 * i));
    CHECK(fock::apply(SparseOperator::zero(basis), v).norm() == 0.0);
    CHECK((fock::apply(SparseOperator::identity(basis), v) - v).norm() == 0.0);
    CHECK_THROWS_AS(fock::apply(a1, Vector::Zero(3)), InputError);

    const auto other = enumerate_basis(4, 5);
    CHECK_THROWS_AS(commutator(a1, ladder(LadderKind::create, 0, other)), InputError);
    CHECK_THROWS_AS(a1 + ladder(LadderKind::create, 0, other), InputError);
}

TEST_CASE("drop tolerance and serialization") {
    const auto basis = enumerate_basis(4, 3);
    CHECK((1e-15 * SparseOperator::identity(basis)).nonzeros() == 0);
    CHECK((1e-13 * SparseOperator::identity(basis)).nonzeros() == basis->size());

    const auto op = Complex(0.5, -2.0) * ladder(LadderKind::create, 2, basis) + number(1, basis);
    const auto j = op.to_json();
    CHECK(j["basis"]["modes"] == 4);
    CHECK(j["basis"]["n_max"] == 3);
    const auto& entries = j["entries"];
    for (std::size_t k = 1; k < entries.size(); ++k) {
        const auto prev = std::make_pair(entries[k - 1][0].get<int>(), entries[k - 1][1].get<int>());
        const auto cur = std::make_pair(entries[k][0].get<int>(), entries[k][1].get<int>());
        CHECK(prev < cur);
    }
    const auto back = SparseOperator::from_json(j);
    CHECK(*back.basis() == *basis);
    CHECK((back - op).is_zero());
    CHECK(back.to_json() == j);
}
