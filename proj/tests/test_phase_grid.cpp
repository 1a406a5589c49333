#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <numbers>

#include "oracles.hpp"
#include "wigstat/io.hpp"
#include "wigstat/transforms.hpp"

using namespace wig;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

TEST_CASE("make_axis places the origin at n/2") {
    const Axis a = make_axis(4, 1.0);
    CHECK(a.coordinate(0) == -2.0);
    CHECK(a.coordinate(1) == -1.0);
    CHECK(a.coordinate(2) == 0.0);
    CHECK(a.coordinate(3) == 1.0);

    const Axis b = make_axis(2, 0.5);
    CHECK(b.coordinate(0) == -0.5);
    CHECK(b.coordinate(1) == 0.0);
}

TEST_CASE("make_axis rejects bad parameters") {
    CHECK_THROWS_AS(make_axis(3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_axis(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_axis(8, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_axis(8, -0.25), std::invalid_argument);
}

TEST_CASE("dual_axis spacing") {
    CHECK_THAT(dual_axis(make_axis(4, 1.0)).spacing, WithinRel(kPi / 4.0, 1e-15));
    CHECK_THAT(dual_axis(make_axis(8, 0.25)).spacing, WithinRel(kPi / 2.0, 1e-15));

    const Axis a = make_axis(16, 0.3);
    CHECK_THAT(dual_axis(dual_axis(a)).spacing, WithinRel(a.spacing, 1e-15));
}

TEST_CASE("half_angle_transform of a Gaussian") {
    const Axis a = make_axis(256, 0.08);
    const SampledField f = oracle::sample_1d(a, [](double z) { return std::exp(-z * z); });
    REQUIRE(box_adequate(f));
    const SampledField g = half_angle_transform(f, +1);

    double err = 0.0;
    for (int k = 0; k < g.axis(0).n_points; ++k) {
        const double v = g.axis(0).coordinate(k);
        err = std::max(err, std::abs(g.at(k) - kSqrtPi * std::exp(-v * v)));
    }
    CHECK(err < 1e-8);
}

TEST_CASE("half_angle_transform of a unit impulse is flat") {
    const Axis a = make_axis(64, 0.2);
    SampledField f({a});
    f.at(a.origin_index) = 1.0 / a.spacing;
    const SampledField g = half_angle_transform(f, +1);
    for (int k = 0; k < 64; ++k) {
        CHECK_THAT(g.at(k).real(), WithinAbs(1.0, 1e-13));
        CHECK_THAT(g.at(k).imag(), WithinAbs(0.0, 1e-13));
    }
}

TEST_CASE("half_angle_transform parity: odd real input gives odd imaginary output") {
    const Axis a = make_axis(128, 0.1);
    const SampledField f = oracle::sample_1d(a, [](double z) { return z * std::exp(-z * z); });
    const SampledField g = half_angle_transform(f, +1);
    const int n = 128;
    for (int k = 0; k < n; ++k) CHECK(std::abs(g.at(k).real()) < 1e-12);
    for (int k = 1; k < n; ++k)
        CHECK_THAT(g.at(k).imag(), WithinAbs(-g.at(n - k).imag(), 1e-12));
}

TEST_CASE("half_angle_transform requires one axis") {
    SampledField f({make_axis(4, 1.0), make_axis(4, 1.0)});
    CHECK_THROWS_AS(half_angle_transform(f, +1), std::invalid_argument);
}

TEST_CASE("half_angle_transform matches the direct-sum oracle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const Axis a = make_axis(32, 0.37);
    SampledField f({a});
    for (int j = 0; j < 32; ++j) f.at(j) = cplx(uni(rng), uni(rng));
    for (int sign : {+1, -1}) {
        const SampledField fast = half_angle_transform(f, sign);
        const SampledField slow = oracle::naive_half_angle(f, sign);
        CHECK(max_abs_diff(fast, slow) < 1e-12 * max_abs(slow));
    }
}

TEST_CASE("transform round trip: sign +1 then -1 divided by pi") {
    for (double dz : {0.08, 0.21}) {
        const Axis a = make_axis(128, dz);
        const SampledField f = oracle::sample_1d(a, [&](double z) {
            return std::exp(-z * z) * (1.0 + 0.3 * std::cos(z));
        });
        SampledField back = half_angle_transform(half_angle_transform(f, +1), -1);
        back *= 1.0 / kPi;
        double err = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(back[i] - f[i]));
        CHECK(err < 1e-10 * max_abs(f));
    }
}

TEST_CASE("transform linearity") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const Axis a = make_axis(64, 0.15);
    SampledField f({a}), g({a});
    for (int j = 0; j < 64; ++j) {
        f.at(j) = cplx(uni(rng), uni(rng));
        g.at(j) = cplx(uni(rng), uni(rng));
    }
    const cplx alpha(0.7, -1.3), beta(-0.2, 0.4);
    const SampledField lhs = half_angle_transform(alpha * f + beta * g, +1);
    const SampledField rhs =
        alpha * half_angle_transform(f, +1) + beta * half_angle_transform(g, +1);
    CHECK(max_abs_diff(lhs, rhs) < 1e-13 * max_abs(rhs));
}

TEST_CASE("Parseval-type norm preservation on random band-limited fields") {
    std::mt19937 rng(5);
    const Axis a = make_axis(128, 0.11);
    for (int trial = 0; trial < 4; ++trial) {
        const SampledField f = oracle::random_band_limited(a, rng);
        const SampledField g = half_angle_transform(f, +1);
        double nf = 0.0, ng = 0.0;
        for (const cplx& v : f.values()) nf += std::norm(v);
        for (const cplx& v : g.values()) ng += std::norm(v);
        nf *= a.spacing;
        ng *= g.axis(0).spacing;
        // |g|^2 integral = pi * |f|^2 integral for this kernel normalization
        CHECK_THAT(ng, WithinRel(kPi * nf, 1e-8));
    }
}

TEST_CASE("integrate") {
    const Axis fine = make_axis(256, 0.08);
    const SampledField g = oracle::sample_1d(fine, [](double x) { return std::exp(-x * x); });
    CHECK_THAT(integrate(g).real(), WithinAbs(kSqrtPi, 1e-10));
    CHECK_THAT(integrate(g).imag(), WithinAbs(0.0, 1e-14));

    const Axis tiny = make_axis(4, 1.0);
    SampledField ones({tiny});
    for (int j = 0; j < 4; ++j) ones.at(j) = 1.0;
    CHECK(integrate(ones) == cplx(4.0, 0.0));

    SampledField zero({tiny});
    CHECK(integrate(zero) == cplx{});
}

TEST_CASE("boundary guard flags fat-tailed boxes") {
    const Axis small = make_axis(16, 0.2);
    const SampledField fat = oracle::sample_1d(small, [](double x) { return std::exp(-x * x); });
    CHECK_FALSE(box_adequate(fat));
    const Axis wide = make_axis(256, 0.08);
    const SampledField ok = oracle::sample_1d(wide, [](double x) { return std::exp(-x * x); });
    CHECK(box_adequate(ok));
}

TEST_CASE("field validation") {
    CHECK_THROWS_AS(SampledField({make_axis(4, 1.0)}, std::vector<cplx>(3)),
                    std::invalid_argument);
    SampledField f({make_axis(4, 1.0)});
    f.at(2) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(f.require_finite("test"), std::domain_error);
}

TEST_CASE("field serialization round trip is lossless") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SampledField f({make_axis(8, 0.37), make_axis(4, 1.25)});
    for (auto& v : f.values()) v = cplx(uni(rng), uni(rng));
    const std::string path = "phase_grid_io_test.field";
    save_field(f, path);
    const SampledField g = load_field(path);
    REQUIRE(g.rank() == 2);
    CHECK(g.axis(0).n_points == 8);
    CHECK(g.axis(1).spacing == 1.25);
    double err = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(f[i] - g[i]));
    CHECK(err == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("csv export shape") {
    SampledField f({make_axis(2, 1.0), make_axis(2, 0.5)});
    f.at(0, 0) = cplx(1.0, -2.0);
    const std::string path = "phase_grid_csv_test.csv";
    export_csv(f, path);
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 5);  // header + 4 samples
    CHECK(lines[0] == "x0,x1,re,im");
    CHECK(lines[1] == "-1,-0.5,1,-2");
    std::remove(path.c_str());
}

TEST_CASE("integrate_out and transpose") {
    const Axis a = make_axis(4, 0.5), b = make_axis(8, 0.25);
    SampledField f({a, b});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 8; ++j) f.at(i, j) = cplx(i, j);
    const int sum_axis[] = {1};
    const SampledField m = integrate_out(f, sum_axis);
    REQUIRE(m.rank() == 1);
    CHECK_THAT(m.at(2).real(), WithinRel(2.0 * 8 * 0.25, 1e-14));

    const int perm[] = {1, 0};
    const SampledField t = transpose(f, perm);
    REQUIRE(t.axis(0).n_points == 8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 8; ++j) CHECK(t.at(j, i) == f.at(i, j));
}
