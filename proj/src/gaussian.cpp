#include "wigstat/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace wig {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}  // namespace

GaussianOrbital make_orbital(double d, double b) {
    if (!(d > 1e-6) || !(d < 1e6))
        throw std::invalid_argument("GaussianOrbital: width parameter d outside (1e-6, 1e6)");
    if (!std::isfinite(b)) throw std::invalid_argument("GaussianOrbital: chirp must be finite");
    return GaussianOrbital{d, b};
}

InterferenceParams InterferenceParams::from(const GaussianOrbital& j, const GaussianOrbital& k) {
    InterferenceParams p;
    p.d_jk = cplx(0.5 * (j.d + k.d), 0.5 * (j.b * j.d - k.b * k.d));
    p.b_jk = cplx(0.5 * (j.b * j.d + k.b * k.d), -0.5 * (j.d - k.d));
    p.A_jk = p.d_jk + p.b_jk * p.b_jk / p.d_jk;
    p.B_jk = p.b_jk / p.d_jk;
    return p;
}

InterferenceWigner::InterferenceWigner(const GaussianOrbital& j, const GaussianOrbital& k)
    : p_(InterferenceParams::from(j, k)) {
    // principal branch: Re d_jk = (d_j + d_k)/2 > 0, so sqrt is continuous
    prefactor_ = std::pow(j.d, 0.25) * std::pow(k.d, 0.25) / (kPi * std::sqrt(p_.d_jk));
}

cplx InterferenceWigner::operator()(double x, double p) const {
    return prefactor_ * std::exp(-p_.A_jk * x * x - 2.0 * p_.B_jk * x * p - p * p / p_.d_jk);
}

InterferenceWigner interference_wigner(const GaussianOrbital& j, const GaussianOrbital& k) {
    return InterferenceWigner(j, k);
}

cplx orbital_wavefunction(const GaussianOrbital& o, double x) {
    const double amp = std::pow(o.d / kPi, 0.25);
    return amp * std::exp(cplx(-0.5 * o.d * x * x, -0.5 * o.b * o.d * x * x));
}

Axis PairGrid::position_axis() const { return make_axis(n_points, dx); }

Axis PairGrid::momentum_axis() const {
    return make_axis(n_points, dp > 0.0 ? dp : kPi / (2.0 * n_points * dx));
}

PairGrid balanced_pair_grid(std::span<const double> frequencies, int n_points) {
    if (frequencies.empty()) throw std::invalid_argument("balanced_pair_grid: no frequencies");
    double log_f = 0.0;
    for (double f : frequencies) {
        if (!(f > 0.0)) throw std::invalid_argument("balanced_pair_grid: frequencies must be > 0");
        log_f += std::log(f);
    }
    const double f = std::exp(log_f / static_cast<double>(frequencies.size()));
    PairGrid g;
    g.n_points = n_points;
    g.dx = std::sqrt(kPi / (2.0 * n_points * f));
    return g;
}

PairGrid pair_grid_for(const GaussianOrbital& a, const GaussianOrbital& b, int n_points) {
    // per-orbital scales: d in position, d (1 + b^2) in momentum
    const double fs[] = {a.d, a.d * (1.0 + a.b * a.b), b.d, b.d * (1.0 + b.b * b.b)};
    return balanced_pair_grid(fs, n_points);
}

WignerFunction pair_quasidensity(const GaussianOrbital& o1, const GaussianOrbital& o2, int sign,
                                 const PairGrid& grid, Exec exec) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pair_quasidensity: sign must be +1 or -1");
    if (sign == -1 && o1.d == o2.d && o1.b == o2.b)
        throw std::domain_error("pair_quasidensity: antisymmetric pair of identical orbitals vanishes");

    const Axis ax = grid.position_axis();
    const Axis ap = grid.momentum_axis();
    const int n = ax.n_points;

    const InterferenceWigner w11(o1, o1), w22(o2, o2), w12(o1, o2), w21(o2, o1);
    // single-body tables over (x, p)
    SampledField t11({ax, ap}), t22({ax, ap}), t12({ax, ap}), t21({ax, ap});
    parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t i) {
        const double x = ax.coordinate(static_cast<int>(i));
        for (int k = 0; k < n; ++k) {
            const double p = ap.coordinate(k);
            t11.at(static_cast<int>(i), k) = w11(x, p);
            t22.at(static_cast<int>(i), k) = w22(x, p);
            t12.at(static_cast<int>(i), k) = w12(x, p);
            t21.at(static_cast<int>(i), k) = w21(x, p);
        }
    });

    SampledField W({ax, ax, ap, ap});
    auto wv = W.values();
    const auto a11 = t11.values(), a22 = t22.values(), a12 = t12.values(), a21 = t21.values();
    const std::size_t N = static_cast<std::size_t>(n);
    parallel_for(N * N, exec, [&](std::size_t unit) {
        const std::size_t j1 = unit / N, j2 = unit % N;
        for (std::size_t k1 = 0; k1 < N; ++k1) {
            const cplx b11 = a11[j1 * N + k1];
            const cplx b22 = a22[j1 * N + k1];
            const cplx b12 = a12[j1 * N + k1];
            const cplx b21 = a21[j1 * N + k1];
            const std::size_t row = ((j1 * N + j2) * N + k1) * N;
            for (std::size_t k2 = 0; k2 < N; ++k2) {
                const cplx c = b11 * a22[j2 * N + k2] + b22 * a11[j2 * N + k2] +
                               static_cast<double>(sign) *
                                   (b12 * a21[j2 * N + k2] + b21 * a12[j2 * N + k2]);
                wv[row + k2] = c.real();  // cross terms are conjugate pairs
            }
        }
    });

    const cplx total = integrate(W, exec);
    if (std::abs(total) < 1e-300)
        throw std::domain_error("pair_quasidensity: state integrates to zero");
    W *= 1.0 / total.real();
    return WignerFunction(2, std::move(W));
}

double lambda_identity_residual(const GaussianOrbital& j, const GaussianOrbital& k,
                                const Grid2& grid, Exec exec) {
    const Axis ar = make_axis(grid.n_points, grid.dr);
    const Axis ap = dual_axis(ar);  // matched so the transformed grid equals the p grid
    const int n = ar.n_points;

    const InterferenceWigner wjj(j, j), wkk(k, k), wjk(j, k), wkj(k, j);
    auto lam = [&](const InterferenceWigner& a, const InterferenceWigner& b, double r, double q) {
        const double x1 = r / kSqrt2, x2 = -r / kSqrt2;  // R = P = 0
        const double p1 = q / kSqrt2, p2 = -q / kSqrt2;
        return a(x1, p1) * b(x2, p2);
    };

    SampledField m1({ar, ap});  // lambda_jjkk(r, p)
    SampledField m2({ar, ap});  // lambda_jkkj(r, v)
    parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t i) {
        const double r = ar.coordinate(static_cast<int>(i));
        for (int c = 0; c < n; ++c) {
            const double q = ap.coordinate(c);
            m1.at(static_cast<int>(i), c) = lam(wjj, wkk, r, q);
            m2.at(static_cast<int>(i), c) = lam(wjk, wkj, r, q);
        }
    });

    SampledField lhs = half_angle_transform_axis(m1, 0, +1, exec);  // [v, p]
    SampledField rhs = half_angle_transform_axis(m2, 0, +1, exec);  // [p, v]
    double num = 0.0, den = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const cplx l = lhs.at(a, b);
            num = std::max(num, std::abs(l - rhs.at(b, a)));
            den = std::max(den, std::abs(l));
        }
    return den > 0.0 ? num / den : 0.0;
}

}  // namespace wig
