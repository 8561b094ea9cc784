#include "commands.hpp"

#include "dynalg/branching.hpp"
#include "dynalg/chart.hpp"
#include "dynalg/constraint.hpp"
#include "dynalg/errors.hpp"
#include "dynalg/ks.hpp"
#include "dynalg/so42.hpp"
#include "dynalg/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace dynalg::cli {

namespace {

using nlohmann::json;

std::string to_string(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::text: return "text";
    }
    return "json";
}

Check check(std::string name, bool ok, json detail = json::object()) { return {std::move(name), ok, std::move(detail)}; }

std::string generic_csv(const std::vector<Check>& checks) {
    std::ostringstream os;
    os << "check,ok,detail\n";
    for (const auto& c : checks) {
        std::string d = c.detail.dump();
        std::replace(d.begin(), d.end(), '"', '\'');
        os << c.name << ',' << (c.ok ? "true" : "false") << ",\"" << d << "\"\n";
    }
    return os.str();
}

int labeled_levels_for(int n_max, int degree) {
    // a degree-d polynomial is exact on totals <= n_max - 2d; level n has total 2(n - 1)
    return std::min(4, (n_max - 2 * degree) / 2 + 1);
}

CommandResult verify_algebra(const RunConfig& cfg) {
    CommandResult r{"verify-algebra", {}, {}, {}};
    const auto basis = fock::enumerate_basis(4, cfg.n_max);
    const auto g = so42::build_generators(basis);

    const auto rep = so42::verify_commutators(g, so42::MetricTensor{}, cfg.tol, {}, cfg.parallel);
    r.checks.push_back(check("commutation_table", rep.ok(),
                             {{"pairs", rep.pairs.size()}, {"max_residual", rep.max_residual},
                              {"safe_states", rep.safe_states}, {"basis_size", basis->size()}}));

    double herm = 0.0;
    for (const auto& [a, b] : so42::index_pairs()) herm = std::max(herm, (g.at(a, b) - g.at(a, b).adjoint()).max_abs());
    r.checks.push_back(check("hermitian_generators", herm < cfg.tol, {{"max_deviation", herm}}));

    const int levels = labeled_levels_for(cfg.n_max, 2);
    if (levels >= 1) {
        const auto states = so42::label_states(g, levels);
        const auto lc = so42::check_labels(g, states);
        r.checks.push_back(check("labeling", lc.worst() < 1e-8 && lc.nondegenerate,
                                 {{"states", states.size()}, {"levels", levels}, {"worst", lc.worst()},
                                  {"j2_minus_k2", lc.j2_minus_k2}, {"l_dot_a", lc.l_dot_a}}));
    } else {
        r.checks.push_back(check("labeling", false, {{"error", "cutoff too small for any level"}}));
    }

    const int target = std::min(4, cfg.n_max / 2);
    if (target >= 1) {
        const std::size_t span = so42::orbit_span(g, target);
        std::size_t expected = 0;
        for (int n = 1; n <= target; ++n) expected += static_cast<std::size_t>(n * n);
        r.checks.push_back(check("orbit_span", span == expected,
                                 {{"n_target", target}, {"dimension", span}, {"expected", expected}}));
    } else {
        r.checks.push_back(check("orbit_span", false, {{"error", "cutoff too small"}}));
    }
    r.csv = generic_csv(r.checks);
    return r;
}

CommandResult casimirs(const RunConfig& cfg) {
    CommandResult r{"casimirs", {}, {}, {}};
    const int levels = labeled_levels_for(cfg.n_max, 4);
    if (levels < 1) {
        r.checks.push_back(check("casimir_eigenvalues", false, {{"error", "cutoff too small for the quartic invariant"}}));
        r.csv = generic_csv(r.checks);
        return r;
    }
    const auto basis = fock::enumerate_basis(4, cfg.n_max);
    const auto g = so42::build_generators(basis);
    const auto states = so42::label_states(g, levels);
    const auto c = so42::casimirs(g, so42::MetricTensor{});
    const auto eig = so42::casimir_eigenvalues(c, states, {6.0, 0.0, -12.0});
    std::ostringstream csv;
    csv << "casimir,states,expected,observed_min,observed_max,eigen_residual,expected_residual\n";
    for (const auto& e : eig) {
        r.checks.push_back(check(e.name, e.ok(1e-8), e.to_json()));
        csv << e.name << ',' << e.states << ',' << e.expected << ',' << e.observed_min << ',' << e.observed_max << ','
            << e.eigen_residual << ',' << e.expected_residual << '\n';
    }
    r.csv = csv.str();
    return r;
}

CommandResult descent(const RunConfig& cfg) {
    CommandResult r{"descent", {}, {}, {}};
    const auto d = constraint::descent_chain(std::nullopt, cfg.seed);
    r.data = d.to_json();
    r.checks.push_back(check("parent_dim", d.parent_dim == 36, {{"value", d.parent_dim}}));
    r.checks.push_back(check("parent_jacobi", d.parent_jacobi));
    r.checks.push_back(check("centralizer_dim", d.centralizer_dim == 16, {{"value", d.centralizer_dim}}));
    r.checks.push_back(check("quotient_dim", d.quotient_dim == 15, {{"value", d.quotient_dim}}));
    r.checks.push_back(check("quotient_jacobi", d.quotient_jacobi));
    const auto& s = d.killing_signature;
    r.checks.push_back(check("killing_signature", s.plus == 8 && s.minus == 7 && s.zero == 0,
                             {{"value", json::array({s.plus, s.minus, s.zero})}}));
    r.checks.push_back(check("rank", d.rank == 3, {{"value", d.rank}}));
    r.checks.push_back(check("center_dim", d.center_dim == 0, {{"value", d.center_dim}}));
    r.checks.push_back(check("match_defining_so42", d.match_ok(), d.match.to_json()));
    r.csv = generic_csv(r.checks);
    return r;
}

CommandResult spectrum_cmd(const RunConfig& cfg) {
    CommandResult r{"spectrum", {}, {}, {}};
    if (cfg.system != "both" && cfg.system != "hydrogen" && cfg.system != "oscillator")
        throw InputError("spectrum: --system must be hydrogen, oscillator or both");
    std::vector<spectrum::TableRow> rows;
    if (cfg.system != "oscillator") {
        const int N = cfg.dim ? cfg.dim : 3;
        auto t = spectrum::table(spectrum::System::hydrogen, N, 1, cfg.levels);
        rows.insert(rows.end(), t.begin(), t.end());
        if (N == 3) {
            bool ok = true;
            for (const auto& row : t) ok = ok && row.degeneracy == BigInt(row.n) * row.n;
            r.checks.push_back(check("hydrogen_3d_degeneracy_n_squared", ok, {{"levels", cfg.levels}}));
        }
        bool positive = true;
        bool increasing = true;
        for (std::size_t i = 0; i < t.size(); ++i) {
            positive = positive && t[i].degeneracy > 0;
            if (i > 0) increasing = increasing && t[i].coefficient < t[i - 1].coefficient;
        }
        r.checks.push_back(check("hydrogen_levels_monotone", positive && increasing, {{"N", N}}));
    }
    if (cfg.system != "hydrogen") {
        const int N = cfg.dim ? cfg.dim : 4;
        auto t = spectrum::table(spectrum::System::oscillator, N, 0, cfg.levels);
        rows.insert(rows.end(), t.begin(), t.end());
        bool positive = true;
        for (const auto& row : t) positive = positive && row.degeneracy > 0;
        r.checks.push_back(check("oscillator_degeneracy_positive", positive, {{"N", N}}));
    }
    if (cfg.system == "both") {
        json bridge = json::array();
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            const auto b = spectrum::oscillator_hydrogen_bridge(n);
            ok = ok && b.ok();
            bridge.push_back({{"n", n}, {"constrained", b.constrained}, {"unconstrained", b.unconstrained}});
        }
        r.checks.push_back(check("oscillator_hydrogen_bridge", ok, {{"levels", bridge}}));
    }
    json table = json::array();
    for (const auto& row : rows)
        table.push_back({{"system", spectrum::to_string(row.system)}, {"N", row.N}, {"n", row.n},
                         {"energy_coefficient", dynalg::to_string(row.coefficient)},
                         {"degeneracy", row.degeneracy.str()}});
    r.data = {{"table", table}};
    r.csv = spectrum::to_csv(rows);
    return r;
}

CommandResult branch(const RunConfig& cfg) {
    CommandResult r{"branch", {}, {}, {}};
    constexpr int kLevels = 4;
    std::vector<branching::BranchingTable> tables;
    bool so3_ok = true;
    for (int n = 1; n <= kLevels; ++n) {
        auto t = branching::so4_to_so3_table({n - 1, n - 1});
        so3_ok = so3_ok && t.total_dim() == n * n;
        tables.push_back(std::move(t));
    }
    r.checks.push_back(check("so4_to_so3_dimensions", so3_ok));
    auto h4 = branching::h_so4_table(kLevels);
    auto h3 = branching::h_so3_table(kLevels);
    r.checks.push_back(check("h_so4_dimension", h4.total_dim() == 30, {{"dim", h4.total_dim()}}));
    r.checks.push_back(check("h_so3_dimension", h3.total_dim() == 30, {{"dim", h3.total_dim()}}));
    tables.push_back(h4);
    tables.push_back(h3);

    const int levels = std::min(kLevels, cfg.n_max / 2 + 1);
    const auto basis = fock::enumerate_basis(4, cfg.n_max);
    const auto g = so42::build_generators(basis);
    const auto states = so42::label_states(g, levels);
    const auto counted = branching::labeled_so3_content(states, levels);
    const auto formula = branching::h_so3_content(levels);
    r.checks.push_back(check("labeled_so3_content", counted == formula && levels == kLevels,
                             {{"levels", levels}, {"states", states.size()}}));
    const auto parity = branching::so32_parity_split(g, states, cfg.tol, cfg.parallel);
    r.checks.push_back(check("so32_parity_split", parity.ok(), parity.to_json()));

    json tj = json::array();
    std::ostringstream csv;
    csv << "parent,label,multiplicity,dim\n";
    for (const auto& t : tables) {
        tj.push_back(t.to_json());
        for (const auto& c : t.constituents)
            csv << '"' << t.parent << "\"," << '"' << c.label << "\"," << c.multiplicity << ',' << c.dim << '\n';
    }
    r.data = {{"tables", tj}};
    r.csv = csv.str();
    return r;
}

CommandResult ks_check(const RunConfig& cfg) {
    CommandResult r{"ks-check", {}, {}, {}};
    std::ostringstream csv;
    csv << "property,samples,max_error,tol,ok\n";
    for (const auto& p : ks::check_suite(cfg.seed, cfg.samples)) {
        r.checks.push_back(check(p.property, p.ok(), p.to_json()));
        csv << p.property << ',' << p.samples << ',' << p.max_error << ',' << p.tol << ',' << (p.ok() ? "true" : "false") << '\n';
    }
    r.csv = csv.str();
    return r;
}

CommandResult chart_cmd(const RunConfig& cfg) {
    CommandResult r{"chart", {}, {}, {}};
    if (cfg.rows < 1) throw InputError("chart: --rows must be positive");
    const auto entries = chart::chart(cfg.rows);
    const auto sizes = chart::chart_rows(cfg.rows);
    bool sizes_ok = true;
    for (int n = 1; n <= cfg.rows; ++n) {
        const auto count = std::count_if(entries.begin(), entries.end(), [n](const auto& e) { return e.n == n; });
        sizes_ok = sizes_ok && count == sizes[static_cast<std::size_t>(n - 1)];
    }
    r.checks.push_back(check("row_sizes", sizes_ok, {{"sizes", sizes}, {"entries", entries.size()}}));

    const auto first = chart::assign_elements(21);
    auto slot = [&](int z) { return first[static_cast<std::size_t>(z - 1)]; };
    const auto h = slot(1), he = slot(2), sc = slot(21);
    r.checks.push_back(check("Z1_slot", h.n == 1 && h.l == 0 && h.m == 0 && h.two_m_s == -1));
    r.checks.push_back(check("Z2_slot", he.n == 1 && he.l == 0 && he.m == 0 && he.two_m_s == 1));
    r.checks.push_back(check("Z21_slot", sc.n == 3 && sc.l == 2 && sc.m == -2 && sc.two_m_s == -1,
                             {{"n", sc.n}, {"l", sc.l}, {"m", sc.m}, {"two_m_s", sc.two_m_s}}));
    r.data = chart::to_json(entries, cfg.rows);
    r.csv = chart::to_csv(entries);
    return r;
}

CommandResult census(const RunConfig&) {
    CommandResult r{"census", {}, {}, {}};
    r.checks.push_back(check("racah_15_3", chart::racah_count(15, 3) == 3));
    r.checks.push_back(check("racah_3_1", chart::racah_count(3, 1) == 0));
    r.checks.push_back(check("racah_8_2", chart::racah_count(8, 2) == 1));
    const auto c = chart::commuting_set_census();
    r.checks.push_back(check("so42_component", c.components.at(0).total() == 9, {{"total", c.components.at(0).total()}}));
    r.checks.push_back(check("su2_component", c.components.at(1).total() == 2, {{"total", c.components.at(1).total()}}));
    r.checks.push_back(check("total", c.total() == 11, {{"total", c.total()}}));
    r.data = c.to_json();
    r.csv = generic_csv(r.checks);
    return r;
}

const std::map<std::string, std::function<CommandResult(const RunConfig&)>>& registry() {
    static const std::map<std::string, std::function<CommandResult(const RunConfig&)>> m{
        {"verify-algebra", verify_algebra}, {"casimirs", casimirs}, {"descent", descent},
        {"spectrum", spectrum_cmd},         {"branch", branch},     {"ks-check", ks_check},
        {"chart", chart_cmd},               {"census", census}};
    return m;
}

json conventions() {
    return {{"so42", so42::conventions()}, {"ks", ks::conventions()}, {"chart", chart::conventions()}};
}

json checks_json(const CommandResult& r) {
    json arr = json::array();
    for (const auto& c : r.checks) arr.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return arr;
}

}  // namespace

bool CommandResult::ok() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"verify-algebra", "casimirs", "descent", "spectrum", "branch",
                                                "ks-check",       "chart",    "census",  "all"};
    return names;
}

std::vector<CommandResult> run(const RunConfig& cfg) {
    if (cfg.n_max < 2) throw InputError("--n-max must be >= 2");
    if (!(cfg.tol > 0)) throw InputError("--tol must be positive");
    if (cfg.command == "all") {
        std::vector<CommandResult> out;
        for (const auto& name : command_names())
            if (name != "all") out.push_back(registry().at(name)(cfg));
        return out;
    }
    const auto it = registry().find(cfg.command);
    if (it == registry().end()) throw InputError("unknown command: " + cfg.command);
    return {it->second(cfg)};
}

std::string render(const RunConfig& cfg, const std::vector<CommandResult>& results) {
    const bool all_ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
    switch (cfg.format) {
        case Format::json: {
            json res = json::array();
            for (const auto& r : results) {
                json entry = {{"command", r.command}, {"ok", r.ok()}, {"checks", checks_json(r)}};
                if (!r.data.is_null()) entry["data"] = r.data;
                res.push_back(std::move(entry));
            }
            const json report = {{"schema", 1},
                                 {"command", cfg.command},
                                 {"config",
                                  {{"n_max", cfg.n_max},
                                   {"tol", cfg.tol},
                                   {"format", to_string(cfg.format)},
                                   {"seed", cfg.seed},
                                   {"parallel", cfg.parallel}}},
                                 {"ok", all_ok},
                                 {"results", res},
                                 {"conventions", conventions()}};
            return report.dump(2) + "\n";
        }
        case Format::csv: {
            std::string s;
            for (const auto& r : results) {
                if (results.size() > 1) s += "# " + r.command + "\n";
                s += r.csv;
            }
            return s;
        }
        case Format::text: {
            std::ostringstream os;
            for (const auto& r : results) {
                os << r.command << ": " << (r.ok() ? "PASS" : "FAIL") << '\n';
                for (const auto& c : r.checks)
                    os << "  [" << (c.ok ? "PASS" : "FAIL") << "] " << c.name
                       << (c.detail.empty() ? "" : " " + c.detail.dump()) << '\n';
            }
            os << (all_ok ? "OK" : "FAILED") << '\n';
            return os.str();
        }
    }
    return {};
}

}  // namespace dynalg::cli
