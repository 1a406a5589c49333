#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wigstat/gaussian.hpp"
#include "wigstat/wigner.hpp"

using namespace wig;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pure-state interference term") {
    const InterferenceWigner w(make_orbital(1.0, 0.0), make_orbital(1.0, 0.0));
    for (double x : {-1.0, 0.0, 0.7})
        for (double p : {-0.5, 0.0, 1.2})
            CHECK_THAT(w(x, p).real(),
                       WithinRel(std::exp(-x * x - p * p) / kPi, 1e-13));
    CHECK(std::abs(w(0.3, -0.4).imag()) < 1e-16);
}

TEST_CASE("chirped pure state exponent") {
    // d = 2, b = 1: x^2 coefficient d + b^2 d = 4, cross 2b = 2, p^2 1/d
    const InterferenceParams p =
        InterferenceParams::from(make_orbital(2.0, 1.0), make_orbital(2.0, 1.0));
    CHECK_THAT(p.A_jk.real(), WithinRel(4.0, 1e-14));
    CHECK(std::abs(p.A_jk.imag()) < 1e-14);
    CHECK_THAT(p.B_jk.real(), WithinRel(1.0, 1e-14));
    CHECK_THAT((1.0 / p.d_jk).real(), WithinRel(0.5, 1e-14));

    const InterferenceWigner w(make_orbital(2.0, 1.0), make_orbital(2.0, 1.0));
    CHECK_THAT(w(0.0, 0.0).real(), WithinRel(1.0 / kPi, 1e-14));
}

TEST_CASE("derived interference parameters recompute from the orbitals") {
    const GaussianOrbital j = make_orbital(1.0, 0.0), k = make_orbital(2.0, 0.0);
    const InterferenceParams p = InterferenceParams::from(j, k);
    CHECK(p.d_jk == cplx(1.5, 0.0));
    CHECK(p.b_jk == cplx(0.0, 0.5));
    CHECK_THAT(p.A_jk.real(), WithinRel(1.5 - 0.25 / 1.5, 1e-14));
    CHECK(p.B_jk == cplx(0.0, 0.5) / cplx(1.5, 0.0));
}

TEST_CASE("closed form matches the transform of the overlap kernel") {
    // rho_jk(x;x') = psi_j(x) psi_k(x')* transformed on the grid
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dd(0.6, 2.5), db(-0.8, 0.8);
    for (int trial = 0; trial < 3; ++trial) {
        const GaussianOrbital oj = make_orbital(trial == 0 ? 1.0 : dd(rng),
                                                trial == 0 ? 0.0 : db(rng));
        const GaussianOrbital ok = make_orbital(trial == 0 ? 2.0 : dd(rng),
                                                trial == 0 ? 0.0 : db(rng));
        const Axis a = make_axis(256, 0.08);
        SampledField kernel({a, a});
        for (int i = 0; i < 256; ++i)
            for (int j2 = 0; j2 < 256; ++j2)
                kernel.at(i, j2) = orbital_wavefunction(oj, a.coordinate(i)) *
                                   std::conj(orbital_wavefunction(ok, a.coordinate(j2)));
        SampledField w = wigner_pair_step(kernel, 0, 1, +1);
        w *= 1.0 / kPi;

        const InterferenceWigner closed(oj, ok);
        double err = 0.0;
        for (int i = 0; i < w.axis(0).n_points; ++i) {
            const double x = w.axis(0).coordinate(i);
            for (int k2 = 0; k2 < w.axis(1).n_points; ++k2)
                err = std::max(err,
                               std::abs(w.at(i, k2) - closed(x, w.axis(1).coordinate(k2))));
        }
        CHECK(err < 1e-8);
    }
}

TEST_CASE("conjugation: W_kj is the pointwise conjugate of W_jk") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dd(0.2, 5.0), db(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const GaussianOrbital oj = make_orbital(dd(rng), db(rng));
        const GaussianOrbital ok = make_orbital(dd(rng), db(rng));
        const InterferenceWigner wjk(oj, ok), wkj(ok, oj);
        for (double x : {-0.9, 0.3})
            for (double p : {-0.2, 1.1})
                CHECK(std::abs(wkj(x, p) - std::conj(wjk(x, p))) < 1e-14);
    }
}

TEST_CASE("real part of the exponent matrix is positive definite") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dd(0.1, 10.0), db(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const InterferenceParams p = InterferenceParams::from(
            make_orbital(dd(rng), db(rng)), make_orbital(dd(rng), db(rng)));
        const double a11 = p.A_jk.real();
        const double a12 = p.B_jk.real();
        const double a22 = (1.0 / p.d_jk).real();
        CHECK(a11 > 0.0);
        CHECK(a11 * a22 - a12 * a12 > 0.0);
    }
}

TEST_CASE("pure-state exponent matrix is symplectic") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> dd(0.1, 10.0), db(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double d = dd(rng), b = db(rng);
        const double det = (d + b * b * d) * (1.0 / d) - b * b;
        CHECK_THAT(det, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("pair quasidensity integrates to one and matches the symmetrized density") {
    const GaussianOrbital o1 = make_orbital(1.0, 0.0), o2 = make_orbital(2.0, 0.0);
    const PairGrid g = pair_grid_for(o1, o2, 64);
    const WignerFunction w = pair_quasidensity(o1, o2, +1, g);
    CHECK_THAT(w.normalization().real(), WithinAbs(1.0, 1e-10));
    CHECK(w.realness_residual() < 1e-14);

    // position marginal equals the normalized symmetrized |Psi|^2
    const SampledField m = marginal_position(w);
    const Axis ax = g.position_axis();
    SampledField density({ax, ax});
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            const cplx v = orbital_wavefunction(o1, ax.coordinate(i)) *
                               orbital_wavefunction(o2, ax.coordinate(j)) +
                           orbital_wavefunction(o1, ax.coordinate(j)) *
                               orbital_wavefunction(o2, ax.coordinate(i));
            density.at(i, j) = std::norm(v);
        }
    density *= 1.0 / integrate(density);
    CHECK(max_abs_diff(m, density) < 1e-6 * max_abs(density));
}

TEST_CASE("antisymmetric pair of identical orbitals is rejected") {
    const GaussianOrbital o = make_orbital(1.0, 0.0);
    CHECK_THROWS_AS(pair_quasidensity(o, o, -1, PairGrid{32, 0.25}), std::domain_error);
    CHECK_THROWS_AS(pair_quasidensity(o, o, 0, PairGrid{32, 0.25}), std::invalid_argument);
}

TEST_CASE("orbital parameter validation") {
    CHECK_THROWS_AS(make_orbital(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_orbital(-1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_orbital(1e7, 0.0), std::invalid_argument);
}

TEST_CASE("interference cross identity on the central slice") {
    const Grid2 g{256, 0.0625};
    CHECK(lambda_identity_residual(make_orbital(1.0, 0.0), make_orbital(2.0, 0.0), g) < 1e-7);
    CHECK(lambda_identity_residual(make_orbital(1.0, 0.5), make_orbital(2.0, -0.3), g) < 1e-7);
    CHECK(lambda_identity_residual(make_orbital(0.8, -1.1), make_orbital(1.9, 0.7), g) < 1e-7);
    // identical orbitals: both sides coincide identically
    CHECK(lambda_identity_residual(make_orbital(1.3, 0.4), make_orbital(1.3, 0.4), g) < 1e-12);
}
