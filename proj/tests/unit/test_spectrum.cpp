#include "doctest.h"
#include "oracles.hpp"

#include "dynalg/errors.hpp"
#include "dynalg/spectrum.hpp"

using namespace dynalg;
using namespace dynalg::spectrum;

TEST_CASE("hydrogen energies") {
    CHECK(hydrogen_energy({System::hydrogen, 3, 2, -1.0}) == doctest::Approx(-0.25));
    CHECK(hydrogen_energy({System::hydrogen, 3, 1, -1.0}) == doctest::Approx(-1.0));
    CHECK(hydrogen_energy({System::hydrogen, 5, 2, -1.0}) == doctest::Approx(-4.0 / 9.0));
    CHECK(hydrogen_coefficient(5, 2) == make_rational(4, 9));
    for (int n = 1; n <= 20; ++n) CHECK(hydrogen_coefficient(3, n) == make_rational(1, n * n));
    for (int N = 2; N <= 8; ++N)
        for (int n = 1; n < 10; ++n)
            CHECK(hydrogen_energy({System::hydrogen, N, n, -2.5}) < hydrogen_energy({System::hydrogen, N, n + 1, -2.5}));

    CHECK_THROWS_AS(hydrogen_energy({System::hydrogen, 3, 0, -1.0}), InputError);
    CHECK_THROWS_AS(hydrogen_energy({System::hydrogen, 3, 1, 1.0}), InputError);
    CHECK_THROWS_AS(hydrogen_energy({System::hydrogen, 1, 1, -1.0}), InputError);
    CHECK_THROWS_AS(hydrogen_energy({System::oscillator, 3, 1, -1.0}), InputError);
}

TEST_CASE("hydrogen degeneracy against harmonic sums") {
    for (int n = 1; n <= 10; ++n) CHECK(hydrogen_degeneracy(3, n) == BigInt(n * n));
    CHECK(hydrogen_degeneracy(4, 2) == 5);
    for (int N = 2; N <= 8; ++N)
        for (int n = 1; n <= 10; ++n) {
            CHECK(hydrogen_degeneracy(N, n) == oracle::hydrogen_degeneracy(N, n));
            CHECK(hydrogen_degeneracy(N, n) > 0);
        }
    // large arguments stay exact
    CHECK(hydrogen_degeneracy(30, 40) == oracle::hydrogen_degeneracy(30, 40));
    CHECK_THROWS_AS(hydrogen_degeneracy(3, 0), InputError);
}

TEST_CASE("oscillator") {
    CHECK(oscillator_energy({System::oscillator, 4, 0, 1.0}) == doctest::Approx(1.0));
    CHECK(oscillator_energy({System::oscillator, 4, 2, 1.0}) == doctest::Approx(2.0));
    CHECK(oscillator_energy({System::oscillator, 1, 3, 1.0}) == doctest::Approx(7.0));
    CHECK_THROWS_AS(oscillator_energy({System::oscillator, 4, -1, 1.0}), InputError);
    CHECK_THROWS_AS(oscillator_energy({System::oscillator, 4, 1, -1.0}), InputError);
    CHECK_THROWS_AS(oscillator_energy({System::oscillator, 0, 1, 1.0}), InputError);

    CHECK(oscillator_degeneracy(4, 2) == 10);
    CHECK(oscillator_degeneracy(3, 4) == 15);
    for (int N = 1; N <= 8; ++N) {
        CHECK(oscillator_degeneracy(N, 0) == 1);
        for (int n = 0; n <= 12; ++n) CHECK(oscillator_degeneracy(N, n) == oracle::count_occupations(N, n));
    }
}

TEST_CASE("quantum numbers") {
    CHECK(enumerate_quantum_numbers(1) == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(enumerate_quantum_numbers(2) == std::vector<std::pair<int, int>>{{0, 0}, {1, -1}, {1, 0}, {1, 1}});
    CHECK(enumerate_quantum_numbers(5).size() == 25);
    CHECK_THROWS_AS(enumerate_quantum_numbers(0), InputError);
}

TEST_CASE("oscillator-hydrogen bridge") {
    const auto b1 = oscillator_hydrogen_bridge(1);
    CHECK(b1.constrained == 1);
    CHECK(b1.unconstrained == 1);
    const auto b3 = oscillator_hydrogen_bridge(3);
    CHECK(b3.constrained == 9);
    CHECK(b3.unconstrained == 35);
    const auto b4 = oscillator_hydrogen_bridge(4);
    CHECK(b4.constrained == 16);
    CHECK(b4.unconstrained == 84);
    for (int n = 1; n <= 6; ++n) CHECK(oscillator_hydrogen_bridge(n).ok());
}

TEST_CASE("csv table") {
    const auto rows = table(System::hydrogen, 3, 1, 3);
    const auto csv = to_csv(rows);
    CHECK(csv ==
          "system,N,n,energy_coefficient_num,energy_coefficient_den,degeneracy\n"
          "hydrogen,3,1,1,1,1\nhydrogen,3,2,1,4,4\nhydrogen,3,3,1,9,9\n");
    CHECK(to_csv(table(System::oscillator, 4, 2, 2)) ==
          "system,N,n,energy_coefficient_num,energy_coefficient_den,degeneracy\noscillator,4,2,2,1,10\n");
}
