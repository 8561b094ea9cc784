#include "doctest.h"

#include "dynalg/chart.hpp"
#include "dynalg/errors.hpp"

#include <set>

using namespace dynalg;
using namespace dynalg::chart;

TEST_CASE("Madelung order") {
    std::vector<std::string> names;
    for (const auto& s : madelung_sequence(7)) names.push_back(s.name());
    CHECK(names == std::vector<std::string>{"1s", "2s", "2p", "3s", "3p", "4s", "3d"});
    CHECK(madelung_sequence(1) == std::vector<Subshell>{{1, 0}});
    int cap = 0;
    const auto seq = madelung_sequence(6);
    for (const auto& s : seq) cap += s.capacity();
    CHECK(cap == 20);

    const auto long_seq = madelung_sequence(40);
    std::set<std::pair<int, int>> keys;
    for (std::size_t i = 0; i < long_seq.size(); ++i) {
        const auto& s = long_seq[i];
        CHECK(keys.insert({s.n + s.l, s.n}).second);
        if (i > 0) {
            const auto& p = long_seq[i - 1];
            CHECK(std::make_pair(p.n + p.l, p.n) < std::make_pair(s.n + s.l, s.n));
        }
    }
    CHECK_THROWS_AS(Subshell(2, 2), InputError);
    CHECK(Subshell(4, 3).name() == "4f");
    CHECK(Subshell(3, 2).period() == 4);
    CHECK(Subshell(6, 0).period() == 6);
}

TEST_CASE("element assignment") {
    const auto e = assign_elements(120);
    REQUIRE(e.size() == 120);
    CHECK(e[0].n == 1);
    CHECK(e[0].l == 0);
    CHECK(e[0].m == 0);
    CHECK(e[0].two_m_s == -1);
    CHECK(e[1].two_m_s == 1);
    CHECK(e[1].n == 1);
    const auto& sc = e[20];
    CHECK(sc.Z == 21);
    CHECK(sc.n == 3);
    CHECK(sc.l == 2);
    CHECK(sc.m == -2);
    CHECK(sc.two_m_s == -1);
    CHECK(e[18].n == 4);  // K, 4s
    CHECK(e[56].l == 3);  // first 4f slot

    std::set<std::tuple<int, int, int, int>> slots;
    for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(e[i].Z == static_cast<int>(i) + 1);
        CHECK(slots.insert({e[i].n, e[i].l, e[i].m, e[i].two_m_s}).second);
        if (i > 0) CHECK(e[i - 1].madelung_index <= e[i].madelung_index);
    }
    CHECK(assign_elements(0).empty());
    CHECK(assign_elements(3).back().n == 2);
}

TEST_CASE("chart rows") {
    CHECK(chart_rows(1) == std::vector<int>{2});
    CHECK(chart_rows(3)[2] == 18);
    CHECK(chart_rows(4) == std::vector<int>{2, 8, 18, 32});
    const auto c = chart::chart(4);
    CHECK(c.size() == 60);
    std::map<int, int> per_row;
    for (const auto& e : c) ++per_row[e.chart_row()];
    CHECK(per_row == std::map<int, int>{{1, 2}, {2, 8}, {3, 18}, {4, 32}});
    CHECK(c.front().Z == 1);

    const auto j = to_json(c, 4);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][3]["size"] == 32);
    // 4s and 4p fill in period 4, 4d in period 5, 4f in period 6
    CHECK(j["rows"][3]["periods"] == nlohmann::json::array({4, 5, 6}));
    CHECK(j["rows"][0]["periods"] == nlohmann::json::array({1}));

    const auto csv = to_csv(c);
    CHECK(csv.rfind("Z,n,l,m,two_m_s,chart_row,madelung_index\n1,1,0,0,-1,1,0\n2,1,0,0,1,1,0\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 61);
}

TEST_CASE("Racah count") {
    CHECK(racah_count(15, 3) == 3);
    CHECK(racah_count(3, 1) == 0);
    CHECK(racah_count(8, 2) == 1);
    CHECK_THROWS_AS(racah_count(4, 1), InputError);
    CHECK_THROWS_AS(racah_count(5, 2), InputError);
    CHECK_THROWS_AS(racah_count(3, 0), InputError);
}

TEST_CASE("commuting-set census") {
    const auto c = commuting_set_census();
    REQUIRE(c.components.size() == 2);
    CHECK(c.components[0].total() == 9);
    CHECK(c.components[1].total() == 2);
    CHECK(c.total() == 11);
    CHECK(c.to_json()["total"] == 11);
}
