#include "doctest.h"

#include "dynalg/branching.hpp"
#include "dynalg/errors.hpp"

using namespace dynalg;
using namespace dynalg::branching;

namespace {

const so42::GeneratorSet& g10() {
    static const auto g = so42::build_generators(fock::enumerate_basis(4, 10));
    return g;
}

const std::vector<so42::LabeledState>& states10() {
    static const auto s = so42::label_states(g10(), 4);
    return s;
}

}  // namespace

TEST_CASE("SO(4) to SO(3)") {
    CHECK(so4_to_so3({0, 0}) == std::vector<int>{0});
    CHECK(so4_to_so3({2, 2}) == std::vector<int>{0, 1, 2});
    int dim = 0;
    for (int l : so4_to_so3({3, 3})) dim += 2 * l + 1;
    CHECK(dim == 16);
    CHECK_THROWS_AS(so4_to_so3({1, 3}), UnsupportedLabelError);
    CHECK_THROWS_AS(So4Label(-1, 0), InputError);
    CHECK(So4Label(1, 1).to_string() == "(1/2,1/2)");
    CHECK(So4Label(2, 2).dim() == 9);
    for (int n = 1; n <= 8; ++n) CHECK(so4_to_so3_table({n - 1, n - 1}).total_dim() == n * n);
}

TEST_CASE("h content") {
    CHECK(h_so4_content(1) == std::vector<So4Label>{{0, 0}});
    CHECK(h_so4_content(3) == std::vector<So4Label>{{0, 0}, {1, 1}, {2, 2}});
    int dim = 0;
    for (const auto& l : h_so4_content(4)) dim += l.dim();
    CHECK(dim == 30);

    CHECK(h_so3_content(1) == std::map<int, int>{{0, 1}});
    CHECK(h_so3_content(3) == std::map<int, int>{{0, 3}, {1, 2}, {2, 1}});
    for (int n = 1; n <= 10; ++n) {
        int sum = 0, expected = 0;
        for (const auto& [l, mult] : h_so3_content(n)) {
            CHECK(mult == n - l);
            sum += mult * (2 * l + 1);
        }
        for (int k = 1; k <= n; ++k) expected += k * k;
        CHECK(sum == expected);
        CHECK(h_so4_table(n).total_dim() == expected);
        CHECK(h_so3_table(n).total_dim() == expected);
    }
}

TEST_CASE("branching tables as JSON") {
    const auto j = h_so3_table(3).to_json();
    CHECK(j["parent"].is_string());
    REQUIRE(j["constituents"].size() == 3);
    CHECK(j["constituents"][0] == nlohmann::json{{"label", "l=0"}, {"multiplicity", 3}, {"dim", 1}});
    CHECK(h_so4_table(2).to_json()["constituents"][1]["label"] == "(1/2,1/2)");
}

TEST_CASE("combinatorial content matches the labeled Fock states") {
    for (int n = 1; n <= 4; ++n) CHECK(labeled_so3_content(states10(), n) == h_so3_content(n));
    std::map<int, int> per_level;
    for (const auto& s : states10()) ++per_level[s.n];
    for (const auto& lab : h_so4_content(4)) CHECK(per_level[lab.two_j + 1] == lab.dim());
}

TEST_CASE("so(3,2) parity split") {
    const auto r = so32_parity_split(g10(), states10());
    CHECK(r.closure.pairs.size() == 45);
    CHECK(r.closure.ok());
    CHECK(r.closure.max_residual < 1e-10);
    CHECK(r.parity_leak < 1e-10);
    CHECK(r.even + r.odd == 30);
    CHECK(r.even == 10);
    CHECK(r.ok());
    CHECK(r.to_json()["ok"] == true);
}

TEST_CASE("J15 keeps n+l odd on the ground state") {
    const auto& states = states10();
    const auto w = fock::apply(g10().at(1, 5), states[0].vec);
    double odd = 0.0, even = 0.0;
    for (const auto& u : states) ((u.n + u.l) % 2 ? odd : even) += std::norm(u.vec.dot(w));
    CHECK(even < 1e-20);
    CHECK(odd == doctest::Approx(w.squaredNorm()));
    for (const auto& u : states)
        if (std::norm(u.vec.dot(w)) > 1e-20) {
            CHECK(u.n == 2);
            CHECK(u.l == 1);
        }
}

TEST_CASE("a parity-flipping generator is detected") {
    // J14 flips the parity of n+l; substitute it for J15
    const auto broken = g10().with_replaced(1, 5, g10().at(1, 4));
    const auto r = so32_parity_split(broken, states10());
    CHECK_FALSE(r.ok());
    CHECK(r.parity_leak > 0.1);
    CHECK_FALSE(r.witness.empty());
}
