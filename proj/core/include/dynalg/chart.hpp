#pragma once

// Periodic chart from SO(4,2) x SU(2): Madelung subshell order, rows of
// 2n^2 slots keyed by (l, m, m_s), and the commuting-operator census.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace dynalg::chart {

struct Subshell {
    int n = 1;
    int l = 0;

    Subshell() = default;
    Subshell(int n_, int l_);

    [[nodiscard]] int capacity() const { return 2 * (2 * l + 1); }
    /// "1s", "3d", ...
    [[nodiscard]] std::string name() const;
    /// Conventional chemical period in which the subshell fills.
    [[nodiscard]] int period() const { return l == 0 ? n : n + l - 1; }

    friend bool operator==(const Subshell&, const Subshell&) = default;
};

/// First `count` subshells by (n + l, n).
std::vector<Subshell> madelung_sequence(int count);

struct ChartEntry {
    int Z = 0;
    int n = 0;
    int l = 0;
    int m = 0;
    int two_m_s = -1;
    int madelung_index = 0;  // position of the subshell in madelung_sequence
    int period = 0;

    [[nodiscard]] int chart_row() const { return n; }
};

/// Z = 1..z_max in Madelung order; m ascending, then m_s = -1/2, +1/2.
std::vector<ChartEntry> assign_elements(int z_max);

/// 2n^2 for n = 1..n_rows.
std::vector<int> chart_rows(int n_rows);

/// All slots with n <= n_rows, with the Z that fills each one, sorted by
/// (row, l, m, m_s).
std::vector<ChartEntry> chart(int n_rows);

/// Z,n,l,m,two_m_s,chart_row,madelung_index
std::string to_csv(const std::vector<ChartEntry>& entries);
nlohmann::json to_json(const std::vector<ChartEntry>& entries, int n_rows);

/// (order - 3 rank) / 2
int racah_count(int order, int rank);

struct CensusComponent {
    std::string group;
    int order = 0;
    int rank = 0;
    int cartan = 0;
    int casimir = 0;
    int racah = 0;

    [[nodiscard]] int total() const { return cartan + casimir + racah; }
};

struct Census {
    std::vector<CensusComponent> components;

    [[nodiscard]] int total() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

Census commuting_set_census();

nlohmann::json conventions();

}  // namespace dynalg::chart
