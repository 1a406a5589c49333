#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "oracles.hpp"
#include "wigstat/wigner.hpp"

using namespace wig;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix gaussian_ground_density(int n = 256, double dx = 0.08) {
    return DensityMatrix::from_wavefunction(oracle::gaussian_ground_state(make_axis(n, dx)));
}

}  // namespace

TEST_CASE("Wigner transform of the oscillator ground state") {
    const WignerFunction w = wigner_from_density(gaussian_ground_density());
    CHECK(w.realness_residual() < 1e-12);

    // W(0,0) = 1/pi
    const SampledField& d = w.data();
    const int ix = d.axis(0).origin_index;
    const int ip = d.axis(1).origin_index;
    CHECK_THAT(d.at(ix, ip).real(), WithinAbs(1.0 / kPi, 1e-9));
    CHECK_THAT(d.at(ix, ip).real(), WithinAbs(0.3183098862, 1e-9));

    double err = 0.0;
    for (int i = 0; i < d.axis(0).n_points; ++i) {
        const double x = d.axis(0).coordinate(i);
        for (int k = 0; k < d.axis(1).n_points; ++k) {
            const double p = d.axis(1).coordinate(k);
            err = std::max(err, std::abs(d.at(i, k).real() - std::exp(-x * x - p * p) / kPi));
        }
    }
    CHECK(err < 1e-8);
    CHECK_THAT(w.normalization().real(), WithinAbs(1.0, 1e-8));
}

TEST_CASE("translation covariance") {
    const int n = 256;
    const double dx = 0.08;
    const Axis a = make_axis(n, dx);
    const double shift = 5.0 * dx;
    const SampledField psi0 = oracle::gaussian_ground_state(a);
    const SampledField psi1 = oracle::sample_1d(a, [&](double x) {
        return std::pow(kPi, -0.25) * std::exp(-0.5 * (x - shift) * (x - shift));
    });
    const WignerFunction w0 = wigner_from_density(DensityMatrix::from_wavefunction(psi0));
    const WignerFunction w1 = wigner_from_density(DensityMatrix::from_wavefunction(psi1));
    // shift is 10 samples of the refined x axis
    const int di = 10;
    double err = 0.0;
    const auto& d0 = w0.data();
    const auto& d1 = w1.data();
    for (int i = 0; i + di < d0.axis(0).n_points; ++i)
        for (int k = 0; k < d0.axis(1).n_points; ++k)
            err = std::max(err, std::abs(d1.at(i + di, k) - d0.at(i, k)));
    CHECK(err < 1e-10);
}

TEST_CASE("first excited state is negative at the origin") {
    const Axis a = make_axis(256, 0.08);
    const SampledField psi =
        oracle::sample_1d(a, [](double x) { return oracle::hermite_function(1, 1.0, x); });
    const WignerFunction w = wigner_from_density(DensityMatrix::from_wavefunction(psi));
    const int ix = w.data().axis(0).origin_index;
    const int ip = w.data().axis(1).origin_index;
    CHECK_THAT(w.data().at(ix, ip).real(), WithinAbs(-1.0 / kPi, 1e-8));
}

TEST_CASE("round trip rho -> W -> rho on the ground state") {
    const DensityMatrix rho = gaussian_ground_density();
    const DensityMatrix back = density_from_wigner(wigner_from_density(rho));
    CHECK(max_abs_diff(back.data(), rho.data()) < 1e-10 * max_abs(rho.data()));
}

TEST_CASE("round trip on a random mixed state") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const Axis a = make_axis(64, 0.2);
    // three random orthonormal vectors with random convex weights
    std::vector<SampledField> basis;
    for (int b = 0; b < 3; ++b) {
        SampledField v({a});
        for (int j = 0; j < 64; ++j) v.at(j) = cplx(uni(rng), uni(rng));
        for (const SampledField& prev : basis) {
            cplx overlap{};
            for (int j = 0; j < 64; ++j) overlap += std::conj(prev.at(j)) * v.at(j);
            v -= overlap * prev;
        }
        double norm = 0.0;
        for (int j = 0; j < 64; ++j) norm += std::norm(v.at(j));
        v *= 1.0 / std::sqrt(norm);
        basis.push_back(std::move(v));
    }
    std::vector<std::pair<SampledField, double>> parts;
    parts.emplace_back(basis[0], 0.5);
    parts.emplace_back(basis[1], 0.3);
    parts.emplace_back(basis[2], 0.2);
    const DensityMatrix rho = DensityMatrix::from_mixture(parts);
    CHECK(rho.hermiticity_residual() < 1e-12);
    CHECK_THAT(rho.trace().real(), WithinRel(1.0, 1e-12));

    const WignerFunction w = wigner_from_density(rho);
    CHECK(w.realness_residual() < 1e-10);
    const DensityMatrix back = density_from_wigner(w);
    CHECK(max_abs_diff(back.data(), rho.data()) < 1e-9 * max_abs(rho.data()));
}

TEST_CASE("zero Wigner function maps to zero kernel") {
    const DensityMatrix rho = gaussian_ground_density(64, 0.2);
    WignerFunction w = wigner_from_density(rho);
    w.data() *= 0.0;
    const DensityMatrix back = density_from_wigner(w);
    CHECK(max_abs(back.data()) == 0.0);
}

TEST_CASE("position marginal equals the kernel diagonal") {
    const DensityMatrix rho = gaussian_ground_density();
    const WignerFunction w = wigner_from_density(rho);
    const SampledField m = marginal_position(w);
    double err = 0.0;
    for (int i = 0; i < m.axis(0).n_points; ++i) {
        const double x = m.axis(0).coordinate(i);
        err = std::max(err, std::abs(m.at(i).real() - std::exp(-x * x) / std::sqrt(kPi)));
    }
    CHECK(err < 1e-8);
    CHECK_THAT(integrate(m).real(), WithinAbs(1.0, 1e-8));

    // even x-lines reproduce the diagonal exactly
    const int n = rho.data().axis(0).n_points;
    double exact_err = 0.0;
    for (int i = 0; i < n; ++i)
        exact_err = std::max(exact_err, std::abs(m.at(2 * i) - rho.data().at(i, i)));
    CHECK(exact_err < 1e-13);
}

TEST_CASE("purity of pure and mixed states") {
    const DensityMatrix pure = gaussian_ground_density();
    CHECK_THAT(purity(wigner_from_density(pure)), WithinAbs(1.0, 1e-8));

    const Axis a = make_axis(256, 0.08);
    const SampledField psi0 = oracle::gaussian_ground_state(a);
    const SampledField psi1 =
        oracle::sample_1d(a, [](double x) { return oracle::hermite_function(1, 1.0, x); });
    const DensityMatrix mixed = DensityMatrix::from_mixture({{psi0, 0.5}, {psi1, 0.5}});
    CHECK_THAT(purity(wigner_from_density(mixed)), WithinAbs(0.5, 1e-6));
}

TEST_CASE("purity is quadratic in the field") {
    const DensityMatrix rho = gaussian_ground_density(64, 0.2);
    WignerFunction w = wigner_from_density(rho);
    const double p1 = purity(w);
    w.data() *= 2.0;
    CHECK_THAT(purity(w), WithinRel(4.0 * p1, 1e-12));
}

TEST_CASE("transform is linear in the kernel") {
    const Axis a = make_axis(64, 0.2);
    const SampledField psi0 = oracle::gaussian_ground_state(a);
    const SampledField psi1 =
        oracle::sample_1d(a, [](double x) { return oracle::hermite_function(2, 1.0, x); });
    const DensityMatrix r0 = DensityMatrix::from_wavefunction(psi0);
    const DensityMatrix r1 = DensityMatrix::from_wavefunction(psi1);
    const DensityMatrix mix = DensityMatrix::from_mixture({{psi0, 0.25}, {psi1, 0.75}});
    const SampledField lhs = wigner_from_density(mix).data();
    const SampledField rhs =
        0.25 * wigner_from_density(r0).data() + 0.75 * wigner_from_density(r1).data();
    CHECK(max_abs_diff(lhs, rhs) < 1e-13 * max_abs(rhs));
}

TEST_CASE("momentum-side transform agrees with the position side") {
    // chirped state so the momentum kernel is genuinely complex
    const Axis a = make_axis(256, 0.1);
    const SampledField psi = oracle::sample_1d(a, [](double x) {
        return std::pow(kPi, -0.25) * std::exp(cplx(-0.5 * x * x, -0.35 * x * x));
    });
    const DensityMatrix rho = DensityMatrix::from_wavefunction(psi);
    const WignerFunction wx = wigner_from_density(rho);
    const WignerFunction wp = wigner_from_momentum_density(momentum_representation(rho));

    // position route: x fine (2n points), p coarse (n); momentum route:
    // x coarse (n, same dx/2 spacing over the central window), p fine (2n).
    // The windows overlap on an n x n block with index offsets n/2.
    const int n = a.n_points;
    double err = 0.0;
    const double scale = max_abs(wx.data());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            err = std::max(err, std::abs(wx.data().at(i + n / 2, k) - wp.data().at(i, k + n / 2)));
    CHECK(scale > 0.0);
    CHECK(err < 1e-8 * scale);
}

TEST_CASE("Hermitian input is required") {
    SampledField bad({make_axis(4, 1.0), make_axis(4, 1.0)});
    bad.at(0, 1) = cplx(1.0, 0.0);
    CHECK_THROWS_AS(DensityMatrix::from_field(1, bad, false), std::domain_error);
}

TEST_CASE("two-body transform and marginals") {
    const Axis a = make_axis(32, 0.25);
    SampledField psi({a, a});
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            const double x1 = a.coordinate(i), x2 = a.coordinate(j);
            // symmetric pair of distinct Gaussians
            psi.at(i, j) = std::exp(-0.5 * x1 * x1 - x2 * x2) +
                           std::exp(-0.5 * x2 * x2 - x1 * x1);
        }
    const DensityMatrix rho = DensityMatrix::from_wavefunction(psi);
    const WignerFunction w = wigner_from_density(rho);
    CHECK(w.body_count() == 2);
    CHECK(w.realness_residual() < 1e-10);
    CHECK_THAT(w.normalization().real(), WithinAbs(1.0, 1e-8));

    const SampledField m = marginal_position(w);
    REQUIRE(m.rank() == 2);
    // marginal inherits the x1 <-> x2 symmetry
    double asym = 0.0;
    for (int i = 0; i < m.axis(0).n_points; ++i)
        for (int j = 0; j < m.axis(1).n_points; ++j)
            asym = std::max(asym, std::abs(m.at(i, j) - m.at(j, i)));
    CHECK(asym < 1e-12 * max_abs(m));

    const DensityMatrix back = density_from_wigner(w);
    CHECK(max_abs_diff(back.data(), rho.data()) < 1e-10 * max_abs(rho.data()));
}
