#include "dynalg/spectrum.hpp"

#include "dynalg/errors.hpp"
#include "dynalg/fock.hpp"

#include <sstream>

namespace dynalg::spectrum {

namespace {

BigInt factorial(int k) {
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

void check_hydrogen(int N, int n) {
    if (N < 2) throw InputError("hydrogen: N must be >= 2");
    if (n < 1) throw InputError("hydrogen: n must be >= 1");
}

void check_oscillator(int N, int n) {
    if (N < 1) throw InputError("oscillator: N must be >= 1");
    if (n < 0) throw InputError("oscillator: n must be >= 0");
}

}  // namespace

Rational hydrogen_coefficient(int N, int n) {
    check_hydrogen(N, n);
    const long long num = N - 1;
    const long long den = 2LL * n + N - 3;
    return make_rational(num * num, den * den);
}

double hydrogen_energy(const LevelSpec& spec) {
    if (spec.system != System::hydrogen) throw InputError("hydrogen_energy: spec is not a hydrogen level");
    if (!(spec.reference_energy < 0)) throw InputError("hydrogen_energy: reference energy must be negative");
    return to_double(hydrogen_coefficient(spec.N, spec.n)) * spec.reference_energy;
}

BigInt hydrogen_degeneracy(int N, int n) {
    check_hydrogen(N, n);
    return BigInt(2 * n + N - 3) * factorial(n + N - 3) / (factorial(n - 1) * factorial(N - 1));
}

Rational oscillator_coefficient(int N, int n) {
    check_oscillator(N, n);
    return make_rational(2LL * n + N, N);
}

double oscillator_energy(const LevelSpec& spec) {
    if (spec.system != System::oscillator) throw InputError("oscillator_energy: spec is not an oscillator level");
    if (!(spec.reference_energy > 0)) throw InputError("oscillator_energy: reference energy must be positive");
    return to_double(oscillator_coefficient(spec.N, spec.n)) * spec.reference_energy;
}

BigInt oscillator_degeneracy(int N, int n) {
    check_oscillator(N, n);
    return factorial(n + N - 1) / (factorial(n) * factorial(N - 1));
}

std::vector<std::pair<int, int>> enumerate_quantum_numbers(int n) {
    if (n < 1) throw InputError("enumerate_quantum_numbers: n must be >= 1");
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < n; ++l)
        for (int m = -l; m <= l; ++m) out.emplace_back(l, m);
    return out;
}

BridgeRecord oscillator_hydrogen_bridge(int n) {
    if (n < 1) throw InputError("oscillator_hydrogen_bridge: n must be >= 1");
    BridgeRecord r;
    r.n = n;
    r.total = 2 * (n - 1);
    const fock::FockBasis basis(4, r.total);
    for (const auto& s : basis.states()) {
        if (s.total() != r.total) continue;
        ++r.unconstrained;
        if (s.occ[0] + s.occ[1] == s.occ[2] + s.occ[3]) ++r.constrained;
    }
    r.expected_constrained = hydrogen_degeneracy(3, n);
    r.expected_unconstrained = oscillator_degeneracy(4, r.total);
    return r;
}

std::vector<TableRow> table(System system, int N, int n_from, int n_to) {
    std::vector<TableRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        if (system == System::hydrogen)
            rows.push_back({system, N, n, hydrogen_coefficient(N, n), hydrogen_degeneracy(N, n)});
        else
            rows.push_back({system, N, n, oscillator_coefficient(N, n), oscillator_degeneracy(N, n)});
    }
    return rows;
}

std::string to_string(System s) { return s == System::hydrogen ? "hydrogen" : "oscillator"; }

std::string to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "system,N,n,energy_coefficient_num,energy_coefficient_den,degeneracy\n";
    for (const auto& r : rows)
        os << to_string(r.system) << ',' << r.N << ',' << r.n << ',' << numerator(r.coefficient) << ','
           << denominator(r.coefficient) << ',' << r.degeneracy << '\n';
    return os.str();
}

}  // namespace dynalg::spectrum
