#pragma once

// Branching of the hydrogen representation: SO(4) -> SO(3) within a level,
// SO(4,2) -> SO(4) and SO(4,2) -> SO(3) over levels, and the parity split
// under the so(3,2) subalgebra.

#include "dynalg/so42.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace dynalg::branching {

/// SO(4) irrep (j, k) stored as (2j, 2k).
struct So4Label {
    int two_j = 0;
    int two_k = 0;

    So4Label() = default;
    So4Label(int two_j_, int two_k_);

    [[nodiscard]] int dim() const { return (two_j + 1) * (two_k + 1); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const So4Label&, const So4Label&) = default;
};

/// {0, 1, ..., 2j} for (j, j). UnsupportedLabelError if j != k.
std::vector<int> so4_to_so3(const So4Label& label);

/// ((n-1)/2, (n-1)/2) for n = 1..n_levels.
std::vector<So4Label> h_so4_content(int n_levels);

/// l -> multiplicity (n_levels - l).
std::map<int, int> h_so3_content(int n_levels);

/// l -> number of (n, l) multiplets among labeled states.
std::map<int, int> labeled_so3_content(const std::vector<so42::LabeledState>& states, int n_levels);

struct Constituent {
    std::string label;
    int multiplicity = 1;
    int dim = 1;
};

struct BranchingTable {
    std::string parent;
    std::vector<Constituent> constituents;

    [[nodiscard]] int total_dim() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

BranchingTable so4_to_so3_table(const So4Label& label);
BranchingTable h_so4_table(int n_levels);
BranchingTable h_so3_table(int n_levels);

/// Indices spanning so(3,2) inside so(4,2).
inline constexpr std::array<int, 5> kSo32Indices{1, 2, 3, 5, 6};

struct ParityReport {
    so42::CommutatorReport closure;
    double parity_leak = 0.0;
    std::size_t even = 0;
    std::size_t odd = 0;
    std::string witness;  // worst (generator, state) pair
    double tol = 0.0;

    [[nodiscard]] bool ok() const { return closure.ok() && parity_leak < tol; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Closure of the ten generators with indices in {1,2,3,5,6}, and
/// invariance of the n+l parity classes of the labeled states under them.
ParityReport so32_parity_split(const so42::GeneratorSet& g, const std::vector<so42::LabeledState>& labeled,
                               double tol = 1e-10, bool parallel = false);

}  // namespace dynalg::branching
