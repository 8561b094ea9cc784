#pragma once

// Closed-form levels and degeneracies of the N-dimensional hydrogen atom and
// isotropic oscillator. Energies are in units of the caller's reference
// energy.

#include "dynalg/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dynalg::spectrum {

enum class System { hydrogen, oscillator };

struct LevelSpec {
    System system = System::hydrogen;
    int N = 3;
    int n = 1;
    double reference_energy = -1.0;  // E_N(1) < 0 or F_N(0) > 0
};

/// (N-1)^2 / (2n+N-3)^2, reduced.
Rational hydrogen_coefficient(int N, int n);
double hydrogen_energy(const LevelSpec& spec);
/// (2n+N-3)(n+N-3)! / ((n-1)!(N-1)!)
BigInt hydrogen_degeneracy(int N, int n);

/// (2n+N)/N, reduced.
Rational oscillator_coefficient(int N, int n);
double oscillator_energy(const LevelSpec& spec);
/// (n+N-1)! / (n!(N-1)!)
BigInt oscillator_degeneracy(int N, int n);

/// (l, m) for 0 <= l < n, -l <= m <= l, lexicographic.
std::vector<std::pair<int, int>> enumerate_quantum_numbers(int n);

struct BridgeRecord {
    int n = 0;
    int total = 0;  // 2(n-1)
    std::size_t constrained = 0;
    std::size_t unconstrained = 0;
    BigInt expected_constrained;
    BigInt expected_unconstrained;

    [[nodiscard]] bool ok() const {
        return BigInt(constrained) == expected_constrained && BigInt(unconstrained) == expected_unconstrained;
    }
};

/// Counts the four-mode level with total 2(n-1), with and without
/// n1 + n2 = n3 + n4, on an explicit Fock basis.
BridgeRecord oscillator_hydrogen_bridge(int n);

struct TableRow {
    System system;
    int N;
    int n;
    Rational coefficient;
    BigInt degeneracy;
};

std::vector<TableRow> table(System system, int N, int n_from, int n_to);
std::string to_string(System s);
/// system,N,n,energy_coefficient_num,energy_coefficient_den,degeneracy
std::string to_csv(const std::vector<TableRow>& rows);

}  // namespace dynalg::spectrum
