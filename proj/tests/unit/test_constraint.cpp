#include "doctest.h"

#include "dynalg/constraint.hpp"
#include "dynalg/errors.hpp"

using namespace dynalg;
using namespace dynalg::constraint;
using bilinear::BilinearForm;

namespace {

Coords unit(std::size_t n, std::size_t k) {
    Coords v(n);
    v[k] = 1;
    return v;
}

std::vector<Coords> all_units(std::size_t n) {
    std::vector<Coords> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(unit(n, k));
    return out;
}

}  // namespace

TEST_CASE("signature by congruence") {
    exact::Matrix m(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    CHECK(signature(m) == Signature{1, 1, 0});

    exact::Matrix d(3, 3);
    d(0, 0) = 2;
    d(1, 1) = make_rational(-1, 3);
    CHECK(signature(d) == Signature{1, 1, 1});

    exact::Matrix bad(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(signature(bad), InputError);
}

TEST_CASE("toy algebras") {
    const auto su2 = std::make_shared<const StructureConstants>(su2_compact());
    CHECK(su2->satisfies_jacobi());
    const auto k = killing(*su2);
    CHECK(k.signature == Signature{0, 3, 0});
    CHECK(k.matrix(0, 0) == -2);
    CHECK(rank(*su2) == 1);
    CHECK(center_dimension(*su2) == 0);
    CHECK(derived_dimension(*su2) == 3);

    const auto cent = centralizer(su2, unit(3, 2));
    CHECK(cent.dim() == 1);
    CHECK(cent.coordinates_of(unit(3, 2)).has_value());

    const auto ab = std::make_shared<const StructureConstants>(abelian(4));
    CHECK(killing(*ab).signature == Signature{0, 0, 4});
    CHECK(centralizer(ab, unit(4, 1)).dim() == 4);
    CHECK_THROWS_AS(rank(*ab), NotSemisimpleError);
    CHECK(center_dimension(*ab) == 4);
    CHECK(derived_dimension(*ab) == 0);

    CHECK_THROWS_AS(centralizer(su2, Coords(3)), InputError);
}

TEST_CASE("subalgebra checks") {
    const auto su2 = std::make_shared<const StructureConstants>(su2_compact());
    CHECK_THROWS_AS(Subalgebra(su2, {unit(3, 0), unit(3, 1)}), ClosureError);
    CHECK_THROWS_AS(Subalgebra(su2, {unit(3, 0), unit(3, 0)}), InputError);
    const Subalgebra whole(su2, all_units(3));
    CHECK(whole.structure_constants() == *su2);
    CHECK(whole.structure_constants().labels() == su2->labels());
}

TEST_CASE("quotients") {
    const auto su2 = std::make_shared<const StructureConstants>(su2_compact());
    const Subalgebra whole(su2, all_units(3));
    CHECK(quotient(whole, {}) == *su2);
    CHECK_THROWS_AS(quotient(whole, {unit(3, 0)}), InputError);

    const auto u1su2 = std::make_shared<const StructureConstants>(u1_plus_su2());
    const Subalgebra all(u1su2, all_units(4));
    const auto q = quotient(all, {unit(4, 0)});
    CHECK(q == *su2);
    CHECK(q.satisfies_jacobi());
    CHECK(center_dimension(*u1su2) == 1);
    CHECK_THROWS_AS(killing(*u1su2).signature.zero == 1 ? rank(*u1su2) : 0, NotSemisimpleError);

    const Subalgebra small(u1su2, {unit(4, 0), unit(4, 3)});
    CHECK_THROWS_AS(quotient(small, {unit(4, 1)}), InputError);
}

TEST_CASE("invariant matching") {
    CHECK(match_invariants(su2_compact(), su2_compact()).match());
    const auto r = match_invariants(su2_compact(), abelian(3));
    CHECK(r.dim);
    CHECK_FALSE(r.killing);
    CHECK_FALSE(r.match());
    CHECK(r.to_json()["match"] == false);
}

TEST_CASE("defining representation of so(4,2)") {
    const auto mats = defining_matrices();
    REQUIRE(mats.size() == 15);
    const std::array<int, 6> g{-1, -1, -1, -1, 1, 1};
    for (const auto& m : mats)
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) CHECK(m[j][i] * g[j] + g[i] * m[i][j] == 0);
    const auto so42 = defining_rep();
    CHECK(so42.dim() == 15);
    CHECK(so42.satisfies_jacobi());
    CHECK(killing(so42).signature == Signature{8, 7, 0});
    CHECK(rank(so42) == 3);
    CHECK(center_dimension(so42) == 0);
    CHECK(derived_dimension(so42) == 15);
}

TEST_CASE("descent from sp(8,R)") {
    const auto d = descent_chain();
    CHECK(d.parent_dim == 36);
    CHECK(d.parent_jacobi);
    CHECK(d.centralizer_dim == 16);
    CHECK(d.quotient_dim == 15);
    CHECK(d.quotient_jacobi);
    CHECK(d.killing_signature == Signature{8, 7, 0});
    CHECK(d.rank == 3);
    CHECK(d.center_dim == 0);
    CHECK(d.match_ok());
    const auto j = d.to_json();
    CHECK(j["centralizer_dim"] == 16);
    CHECK(j["killing_signature"] == nlohmann::json::array({8, 7, 0}));
    CHECK(j["match"] == true);
    CHECK(descent_quotient().dim() == 15);
}

TEST_CASE("centralizer dimension by charge counting") {
    // a_i^+ a_j commutes with the pair-number difference iff the pair
    // charges agree; a_i^+ a_j^+ and a_i a_j iff they are opposite
    const std::array<int, 4> q{1, 1, -1, -1};
    int count = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) count += q[i] == q[j];
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) count += 2 * (q[i] + q[j] == 0);
    CHECK(count == 16);
    CHECK(descent_chain().centralizer_dim == static_cast<std::size_t>(count));
}

TEST_CASE("descent is scale invariant") {
    for (const auto& s : {QComplex(3), QComplex(make_rational(-1, 2))}) {
        const auto d = descent_chain(s * bilinear::pair_number_difference());
        CHECK(d.centralizer_dim == 16);
        CHECK(d.quotient_dim == 15);
        CHECK(d.killing_signature == Signature{8, 7, 0});
        CHECK(d.match_ok());
    }
    CHECK_THROWS_AS(descent_chain(BilinearForm::hop(0, 0)), InputError);
}

TEST_CASE("KS fiber generator gives the same descent") {
    // rotations in the (u1, u2) and (u3, u4) planes, opposite senses
    const auto h01 = BilinearForm::hop(0, 1), h10 = BilinearForm::hop(1, 0);
    const auto h23 = BilinearForm::hop(2, 3), h32 = BilinearForm::hop(3, 2);
    const auto fiber = QComplex(0, -1) * (h01 - h10) + QComplex(0, 1) * (h23 - h32);
    CHECK(fiber.adjoint() == fiber);
    const auto d = descent_chain(QComplex::i() * fiber);
    CHECK(d.centralizer_dim == 16);
    CHECK(d.quotient_dim == 15);
    CHECK(d.killing_signature == Signature{8, 7, 0});
    CHECK(d.match_ok());
}

TEST_CASE("split real form of the same chain") {
    const auto basis = bilinear::sp8_split_basis();
    const auto sc = std::make_shared<const StructureConstants>(bilinear::structure_constants(basis));
    CHECK(killing(*sc).signature == Signature{20, 16, 0});
    const auto z = bilinear::BilinearForm::mixer(0, 0) + bilinear::BilinearForm::mixer(1, 1) -
                   bilinear::BilinearForm::mixer(2, 2) - bilinear::BilinearForm::mixer(3, 3);
    const auto zc = bilinear::span_coordinates(basis, z);
    REQUIRE(zc.has_value());
    const auto cent = centralizer(sc, *zc);
    CHECK(cent.dim() == 16);
    const auto q = quotient(cent, {*zc});
    CHECK(killing(q).signature == Signature{9, 6, 0});
    CHECK_FALSE(match_invariants(q, defining_rep()).match());
}

TEST_CASE("the J+, J-, J3 toy is the split form") {
    const auto jp = BilinearForm::hop(0, 1);
    const auto jm = BilinearForm::hop(1, 0);
    const auto j3 = QComplex(make_rational(1, 2)) * (BilinearForm::hop(0, 0) - BilinearForm::hop(1, 1));
    const auto sc = bilinear::structure_constants({{"J+", jp}, {"J-", jm}, {"J3", j3}});
    CHECK(killing(sc).signature == Signature{2, 1, 0});
    CHECK(rank(sc) == 1);
    CHECK_FALSE(match_invariants(sc, su2_compact()).match());
}
