#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "oracles.hpp"
#include "wigstat/gaussian.hpp"
#include "wigstat/harmonium.hpp"
#include "wigstat/statistics.hpp"

using namespace wig;
using Catch::Matchers::WithinAbs;

namespace {

WignerFunction gaussian_pair(double d1, double d2, int sign, int n = 64) {
    const GaussianOrbital o1 = make_orbital(d1, 0.0), o2 = make_orbital(d2, 0.0);
    return pair_quasidensity(o1, o2, sign, pair_grid_for(o1, o2, n));
}

WignerFunction zero_state(int n = 16) {
    const Axis ax = make_axis(n, 0.3);
    const Axis ap = make_axis(n, std::numbers::pi / (2.0 * n * 0.3));
    return WignerFunction(2, SampledField({ax, ax, ap, ap}));
}

}  // namespace

TEST_CASE("first set: symmetric Gaussian pair is Bose") {
    const IntraculeWigner iw = to_intracule(gaussian_pair(1.0, 2.0, +1));
    const StatisticsVerdict v = check_first_set(iw, 1e-6);
    CHECK(v.classification == Statistics::Bose);
    CHECK(v.residual_sym < 1e-8);
    CHECK(v.residual_antisym > 0.5);
    CHECK(v.slices_checked > 100);
}

TEST_CASE("first set: antisymmetric Gaussian pair is Fermi") {
    const IntraculeWigner iw = to_intracule(gaussian_pair(1.0, 2.0, -1));
    const StatisticsVerdict v = check_first_set(iw, 1e-6);
    CHECK(v.classification == Statistics::Fermi);
    CHECK(v.residual_antisym <= 1e-6);
    CHECK(v.residual_sym > 0.5);
}

TEST_CASE("first set: zero field is degenerate") {
    const StatisticsVerdict v = check_first_set(to_intracule(zero_state()), 1e-6);
    CHECK(v.classification == Statistics::Degenerate);
    CHECK(v.residual_sym == 0.0);
    CHECK(v.residual_antisym == 0.0);
    CHECK(v.slices_checked == 0);
}

TEST_CASE("second set agrees with the first on symmetrized states") {
    const IntraculeWigner bose = to_intracule(gaussian_pair(1.0, 2.0, +1));
    CHECK(check_second_set(bose, 1e-6).classification == Statistics::Bose);

    const StatisticsVerdict h = statistics_of_eigenstate(make_harmonium(1.0, 0.0), {0, 2}, 64);
    CHECK(h.classification == Statistics::Bose);

    CHECK(check_second_set(to_intracule(zero_state()), 1e-6).classification ==
          Statistics::Degenerate);
}

TEST_CASE("indistinguishability residual") {
    CHECK(check_indistinguishability(to_intracule(gaussian_pair(1.0, 2.0, +1, 32)), 1e-6) <
          1e-10);
    CHECK(check_indistinguishability(to_intracule(gaussian_pair(1.0, 2.0, -1, 32)), 1e-6) <
          1e-10);

    // non-symmetrized product of distinct orbitals
    const GaussianOrbital o1 = make_orbital(1.0, 0.0), o2 = make_orbital(2.0, 0.0);
    const PairGrid g = pair_grid_for(o1, o2, 16);
    const Axis ax = g.position_axis(), ap = g.momentum_axis();
    const InterferenceWigner w11(o1, o1), w22(o2, o2);
    SampledField prod({ax, ax, ap, ap});
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            for (int k = 0; k < 16; ++k)
                for (int l = 0; l < 16; ++l)
                    prod.at(i, j, k, l) = w11(ax.coordinate(i), ap.coordinate(k)) *
                                          w22(ax.coordinate(j), ap.coordinate(l));
    CHECK(check_indistinguishability(to_intracule(WignerFunction(2, prod)), 1e-6) > 0.1);

    CHECK(check_indistinguishability(to_intracule(zero_state()), 1e-6) == 0.0);
}

TEST_CASE("classify harmonium eigenstates by the parity of m") {
    CHECK(statistics_of_eigenstate(make_harmonium(1.0, 0.0), {0, 1}, 64).classification ==
          Statistics::Fermi);
    CHECK(statistics_of_eigenstate(make_harmonium(1.0, 0.0), {0, 2}, 64).classification ==
          Statistics::Bose);
}

TEST_CASE("an equal Bose/Fermi mixture classifies as Neither") {
    const WignerFunction bose = gaussian_pair(1.0, 2.0, +1);
    const WignerFunction fermi = gaussian_pair(1.0, 2.0, -1);
    const WignerFunction mix(2, 0.5 * bose.data() + 0.5 * fermi.data());
    const StatisticsVerdict v = classify(mix, 1e-6);
    CHECK(v.classification == Statistics::Neither);
    CHECK(v.residual_sym > 1e-6);
    CHECK(v.residual_antisym > 1e-6);
    CHECK(v.residual_indist < 1e-10);
}

TEST_CASE("grid exchange involution is exact") {
    const WignerFunction w = gaussian_pair(1.0, 1.7, +1, 16);
    const IntraculeWigner iw = to_intracule(w);
    const IntraculeWigner twice = iw.reflected().reflected();
    CHECK(max_abs_diff(twice.source_data(), iw.source_data()) == 0.0);
}

TEST_CASE("kernel-level symmetry verdict matches classify over both families") {
    struct Case {
        double d1, d2;
        int sign;
    };
    for (const Case& c : {Case{1.0, 2.0, +1}, Case{1.0, 2.0, -1}, Case{1.0, 1.5, -1}}) {
        const int n = 64;
        const GaussianOrbital o1 = make_orbital(c.d1, 0.0), o2 = make_orbital(c.d2, 0.0);
        const PairGrid g = pair_grid_for(o1, o2, n);
        const Axis ax = g.position_axis();
        SampledField psi({ax, ax});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double x1 = ax.coordinate(i), x2 = ax.coordinate(j);
                psi.at(i, j) = orbital_wavefunction(o1, x1) * orbital_wavefunction(o2, x2) +
                               static_cast<double>(c.sign) * orbital_wavefunction(o1, x2) *
                                   orbital_wavefunction(o2, x1);
            }
        // direct swap test on the wavefunction
        double sym_residual = 0.0, antisym_residual = 0.0, scale = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                sym_residual = std::max(sym_residual, std::abs(psi.at(i, j) - psi.at(j, i)));
                antisym_residual =
                    std::max(antisym_residual, std::abs(psi.at(i, j) + psi.at(j, i)));
                scale = std::max(scale, std::abs(psi.at(i, j)));
            }
        REQUIRE(scale > 0.0);
        const Statistics expected =
            sym_residual < 1e-12 * scale ? Statistics::Bose : Statistics::Fermi;
        REQUIRE((sym_residual < 1e-12 * scale || antisym_residual < 1e-12 * scale));

        const StatisticsVerdict v = classify(pair_quasidensity(o1, o2, c.sign, g), 1e-6);
        CHECK(v.classification == expected);
    }

    for (int m : {0, 1, 2, 3}) {
        const HarmoniumParams hp = make_harmonium(1.0, 0.0);
        const StatisticsVerdict v = statistics_of_eigenstate(hp, {0, m}, 64);
        CHECK(v.classification == (m % 2 == 0 ? Statistics::Bose : Statistics::Fermi));
    }
}

TEST_CASE("first-set pass plus indistinguishability implies the second set") {
    // grid constant C <= 10
    for (int sign : {+1, -1}) {
        const IntraculeWigner iw = to_intracule(gaussian_pair(1.0, 1.5, sign, 64));
        const double tol = 1e-6;
        const double indist = check_indistinguishability(iw, tol);
        const StatisticsVerdict first = check_first_set(iw, tol);
        const StatisticsVerdict second = check_second_set(iw, tol);
        REQUIRE(indist <= tol);
        const double r1 = sign > 0 ? first.residual_sym : first.residual_antisym;
        const double r2 = sign > 0 ? second.residual_sym : second.residual_antisym;
        REQUIRE(r1 <= tol);
        CHECK(r2 <= 10.0 * tol);
    }
}

TEST_CASE("classify never returns the opposite statistics") {
    CHECK(classify(gaussian_pair(1.0, 2.0, +1), 1e-6).classification != Statistics::Fermi);
    CHECK(classify(gaussian_pair(1.0, 2.0, -1), 1e-6).classification != Statistics::Bose);
}

TEST_CASE("mismatched momentum grids are rejected") {
    // dual-spaced momenta (pi/(N dx)) instead of the required pi/(2 N dx)
    const int n = 16;
    const Axis ax = make_axis(n, 0.3);
    const Axis bad = dual_axis(ax);
    SampledField f({ax, ax, bad, bad});
    f.at(8, 8, 8, 8) = 1.0;
    const IntraculeWigner iw = to_intracule(WignerFunction(2, f));
    CHECK_THROWS_AS(check_first_set(iw, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(check_second_set(iw, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(check_first_set(iw, -1.0), std::invalid_argument);
}

TEST_CASE("verdict invariants") {
    const StatisticsVerdict v = classify(gaussian_pair(1.0, 2.0, +1), 1e-6);
    if (v.classification == Statistics::Bose) CHECK(v.residual_sym <= v.tolerance);
    CHECK(v.tolerance == 1e-6);
    CHECK(v.slices_checked > 0);
}
