#include "dynalg/chart.hpp"

#include "dynalg/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace dynalg::chart {

Subshell::Subshell(int n_, int l_) : n(n_), l(l_) {
    if (n < 1 || l < 0 || l >= n) throw InputError("Subshell: need n >= 1 and 0 <= l < n");
}

std::string Subshell::name() const {
    static const std::string letters = "spdfghiklmnoqrtuv";
    const char c = l < static_cast<int>(letters.size()) ? letters[static_cast<std::size_t>(l)] : '?';
    return std::to_string(n) + c;
}

std::vector<Subshell> madelung_sequence(int count) {
    if (count < 0) throw InputError("madelung_sequence: count must be non-negative");
    std::vector<Subshell> all;
    for (int s = 1; s <= count + 1; ++s)
        for (int n = (s + 2) / 2; n <= s; ++n) all.emplace_back(n, s - n);
    std::sort(all.begin(), all.end(), [](const Subshell& a, const Subshell& b) {
        return std::make_pair(a.n + a.l, a.n) < std::make_pair(b.n + b.l, b.n);
    });
    all.resize(static_cast<std::size_t>(count));
    return all;
}

std::vector<ChartEntry> assign_elements(int z_max) {
    if (z_max < 0) throw InputError("assign_elements: z_max must be non-negative");
    std::vector<ChartEntry> out;
    const auto seq = madelung_sequence(z_max / 2 + 1);
    int z = 0;
    for (std::size_t idx = 0; idx < seq.size() && z < z_max; ++idx) {
        const auto& sh = seq[idx];
        for (int m = -sh.l; m <= sh.l && z < z_max; ++m)
            for (int two_ms : {-1, 1}) {
                if (z == z_max) break;
                out.push_back({++z, sh.n, sh.l, m, two_ms, static_cast<int>(idx), sh.period()});
            }
    }
    return out;
}

std::vector<int> chart_rows(int n_rows) {
    if (n_rows < 0) throw InputError("chart_rows: n_rows must be non-negative");
    std::vector<int> rows;
    for (int n = 1; n <= n_rows; ++n) rows.push_back(2 * n * n);
    return rows;
}

std::vector<ChartEntry> chart(int n_rows) {
    if (n_rows < 1) throw InputError("chart: need at least one row");
    // fill until every subshell with n <= n_rows has been seen
    std::set<std::pair<int, int>> pending;
    for (int n = 1; n <= n_rows; ++n)
        for (int l = 0; l < n; ++l) pending.emplace(n, l);
    int z_max = 0;
    int count = 0;
    while (!pending.empty()) {
        const auto seq = madelung_sequence(++count);
        const auto& last = seq.back();
        pending.erase({last.n, last.l});
        z_max += last.capacity();
    }
    std::vector<ChartEntry> out;
    for (const auto& e : assign_elements(z_max))
        if (e.n <= n_rows) out.push_back(e);
    std::sort(out.begin(), out.end(), [](const ChartEntry& a, const ChartEntry& b) {
        return std::tie(a.n, a.l, a.m, a.two_m_s) < std::tie(b.n, b.l, b.m, b.two_m_s);
    });
    return out;
}

std::string to_csv(const std::vector<ChartEntry>& entries) {
    std::ostringstream os;
    os << "Z,n,l,m,two_m_s,chart_row,madelung_index\n";
    for (const auto& e : entries)
        os << e.Z << ',' << e.n << ',' << e.l << ',' << e.m << ',' << e.two_m_s << ',' << e.chart_row() << ','
           << e.madelung_index << '\n';
    return os.str();
}

nlohmann::json to_json(const std::vector<ChartEntry>& entries, int n_rows) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= n_rows; ++n) {
        nlohmann::json slots = nlohmann::json::array();
        std::set<int> periods;
        for (const auto& e : entries) {
            if (e.n != n) continue;
            slots.push_back({{"Z", e.Z}, {"l", e.l}, {"m", e.m}, {"two_m_s", e.two_m_s},
                             {"madelung_index", e.madelung_index}, {"period", e.period}});
            periods.insert(e.period);
        }
        rows.push_back({{"row", n}, {"size", slots.size()}, {"periods", periods}, {"slots", slots}});
    }
    return {{"rows", rows}};
}

int racah_count(int order, int rank) {
    if (order < 1 || rank < 1) throw InputError("racah_count: order and rank must be positive");
    if (order < 3 * rank) throw InputError("racah_count: order must be at least 3 * rank");
    if ((order - 3 * rank) % 2 != 0) throw InputError("racah_count: order - 3 * rank must be even");
    return (order - 3 * rank) / 2;
}

int Census::total() const {
    int t = 0;
    for (const auto& c : components) t += c.total();
    return t;
}

nlohmann::json Census::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : components)
        cs.push_back({{"group", c.group}, {"order", c.order}, {"rank", c.rank}, {"cartan", c.cartan},
                      {"casimir", c.casimir}, {"racah", c.racah}, {"total", c.total()}});
    return {{"components", cs}, {"total", total()}};
}

Census commuting_set_census() {
    Census c;
    c.components.push_back({"SO(4,2)", 15, 3, 3, 3, racah_count(15, 3)});
    c.components.push_back({"SU(2)", 3, 1, 1, 1, racah_count(3, 1)});
    return c;
}

nlohmann::json conventions() {
    return {{"chart_row", "n"}, {"column_key", "(l, m, m_s)"}, {"spin_order", "m_s = -1/2 first"},
            {"madelung", "(n + l, n) ascending"}};
}

}  // namespace dynalg::chart
