#include "dynalg/branching.hpp"

#include "dynalg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dynalg::branching {

namespace {

std::string half(int twice) { return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2"; }

}  // namespace

So4Label::So4Label(int two_j_, int two_k_) : two_j(two_j_), two_k(two_k_) {
    if (two_j < 0 || two_k < 0) throw InputError("So4Label: 2j and 2k must be non-negative");
}

std::string So4Label::to_string() const { return "(" + half(two_j) + "," + half(two_k) + ")"; }

std::vector<int> so4_to_so3(const So4Label& label) {
    if (label.two_j != label.two_k)
        throw UnsupportedLabelError("so4_to_so3: only (j, j) labels are supported, got " + label.to_string());
    std::vector<int> ls;
    for (int l = 0; l <= label.two_j; ++l) ls.push_back(l);
    return ls;
}

std::vector<So4Label> h_so4_content(int n_levels) {
    if (n_levels < 1) throw InputError("h_so4_content: need at least one level");
    std::vector<So4Label> out;
    for (int n = 1; n <= n_levels; ++n) out.emplace_back(n - 1, n - 1);
    return out;
}

std::map<int, int> h_so3_content(int n_levels) {
    if (n_levels < 1) throw InputError("h_so3_content: need at least one level");
    std::map<int, int> out;
    for (int n = 1; n <= n_levels; ++n)
        for (int l = 0; l < n; ++l) ++out[l];
    return out;
}

std::map<int, int> labeled_so3_content(const std::vector<so42::LabeledState>& states, int n_levels) {
    std::map<int, int> out;
    for (const auto& s : states)
        if (s.n <= n_levels && s.m == 0) ++out[s.l];
    return out;
}

int BranchingTable::total_dim() const {
    int d = 0;
    for (const auto& c : constituents) d += c.multiplicity * c.dim;
    return d;
}

nlohmann::json BranchingTable::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : constituents) cs.push_back({{"label", c.label}, {"multiplicity", c.multiplicity}, {"dim", c.dim}});
    return {{"parent", parent}, {"constituents", cs}};
}

BranchingTable so4_to_so3_table(const So4Label& label) {
    BranchingTable t{"SO(4) " + label.to_string(), {}};
    for (int l : so4_to_so3(label)) t.constituents.push_back({"l=" + std::to_string(l), 1, 2 * l + 1});
    return t;
}

BranchingTable h_so4_table(int n_levels) {
    BranchingTable t{"SO(4,2) h, n<=" + std::to_string(n_levels), {}};
    for (const auto& lab : h_so4_content(n_levels)) t.constituents.push_back({lab.to_string(), 1, lab.dim()});
    return t;
}

BranchingTable h_so3_table(int n_levels) {
    BranchingTable t{"SO(4,2) h, n<=" + std::to_string(n_levels), {}};
    for (const auto& [l, mult] : h_so3_content(n_levels))
        t.constituents.push_back({"l=" + std::to_string(l), mult, 2 * l + 1});
    return t;
}

nlohmann::json ParityReport::to_json() const {
    return {{"closure_ok", closure.ok()},
            {"closure_max_residual", closure.max_residual},
            {"closure_pairs", closure.pairs.size()},
            {"parity_leak", parity_leak},
            {"even", even},
            {"odd", odd},
            {"witness", witness},
            {"tol", tol},
            {"ok", ok()}};
}

ParityReport so32_parity_split(const so42::GeneratorSet& g, const std::vector<so42::LabeledState>& labeled,
                               double tol, bool parallel) {
    ParityReport r;
    r.tol = tol;
    r.closure = so42::verify_commutators(g, so42::MetricTensor{}, tol, kSo32Indices, parallel);

    int top = 0;
    for (const auto& s : labeled) {
        top = std::max(top, s.n);
        ((s.n + s.l) % 2 == 0 ? r.even : r.odd)++;
    }

    for (std::size_t a = 0; a < kSo32Indices.size(); ++a)
        for (std::size_t b = a + 1; b < kSo32Indices.size(); ++b) {
            const int ia = kSo32Indices[a];
            const int ib = kSo32Indices[b];
            const auto& op = g.at(ia, ib);
            for (const auto& s : labeled) {
                // images of the top level may reach unlabeled states
                if (s.n >= top) continue;
                const fock::Vector w = fock::apply(op, s.vec);
                const int parity = (s.n + s.l) % 2;
                fock::Vector same = fock::Vector::Zero(w.size());
                double opposite = 0.0;
                for (const auto& u : labeled) {
                    const auto c = u.vec.dot(w);
                    if ((u.n + u.l) % 2 == parity)
                        same += c * u.vec;
                    else
                        opposite += std::norm(c);
                }
                const double leak = std::max(std::sqrt(opposite), (w - same).norm());
                if (leak > r.parity_leak) {
                    r.parity_leak = leak;
                    r.witness = "J" + std::to_string(ia) + std::to_string(ib) + " on (" + std::to_string(s.n) + "," +
                                std::to_string(s.l) + "," + std::to_string(s.m) + ")";
                }
            }
        }
    return r;
}

}  // namespace dynalg::branching
