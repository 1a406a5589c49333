#include "wigstat/harmonium.hpp"

#include <cmath>
#include <numbers>

namespace wig {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}  // namespace

double HarmoniumParams::nu() const { return std::sqrt(k); }
double HarmoniumParams::mu() const { return std::sqrt(k - delta); }

HarmoniumParams make_harmonium(double k, double delta) {
    if (!(k > 0.0)) throw std::invalid_argument("harmonium: k must be positive");
    if (!(k - delta > 0.0)) throw std::invalid_argument("harmonium: k - delta must be positive");
    return HarmoniumParams{k, delta};
}

double laguerre(int m, double x) {
    if (m < 0) throw std::invalid_argument("laguerre: order must be non-negative");
    if (m == 0) return 1.0;
    double lm1 = 1.0;        // L_0
    double lm = 1.0 - x;     // L_1
    for (int j = 1; j < m; ++j) {
        const double lnext = ((2.0 * j + 1.0 - x) * lm - j * lm1) / (j + 1.0);
        lm1 = lm;
        lm = lnext;
    }
    return lm;
}

HarmoniumWigner::HarmoniumWigner(const HarmoniumParams& params, const EigenIndex& idx)
    : params_(params), idx_(idx) {
    make_harmonium(params.k, params.delta);
    if (idx.n < 0 || idx.m < 0)
        throw std::invalid_argument("harmonium: quantum numbers must be non-negative");
}

double HarmoniumWigner::extracule_factor(double R, double P) const {
    const double nu = params_.nu();
    const double h = 0.5 * (P * P + nu * nu * R * R);
    const double sign = idx_.n % 2 == 0 ? 1.0 : -1.0;
    return sign / kPi * laguerre(idx_.n, 4.0 * h / nu) * std::exp(-2.0 * h / nu);
}

double HarmoniumWigner::intracule_factor(double r, double p) const {
    const double mu = params_.mu();
    const double h = 0.5 * (p * p + mu * mu * r * r);
    const double sign = idx_.m % 2 == 0 ? 1.0 : -1.0;
    return sign / kPi * laguerre(idx_.m, 4.0 * h / mu) * std::exp(-2.0 * h / mu);
}

double HarmoniumWigner::operator()(double R, double r, double P, double p) const {
    return extracule_factor(R, P) * intracule_factor(r, p);
}

PairGrid harmonium_grid(const HarmoniumParams& params, int n_points) {
    const double fs[] = {params.nu(), params.mu()};
    return balanced_pair_grid(fs, n_points);
}

WignerFunction sample_eigen_wigner(const HarmoniumParams& params, const EigenIndex& idx,
                                   const PairGrid& grid, Exec exec) {
    const HarmoniumWigner w(params, idx);
    const Axis ax = grid.position_axis();
    const Axis ap = grid.momentum_axis();
    const int n = ax.n_points;

    // R and P take only 2n-1 distinct lattice values; tabulate the two
    // factors over (sum index, sum index) pairs and gather.
    std::vector<double> xs(static_cast<std::size_t>(n)), ps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = ax.coordinate(i);
        ps[static_cast<std::size_t>(i)] = ap.coordinate(i);
    }
    const int nd = 2 * n - 1;
    std::vector<double> ext(static_cast<std::size_t>(nd) * nd), intr(static_cast<std::size_t>(nd) * nd);
    parallel_for(static_cast<std::size_t>(nd), exec, [&](std::size_t a) {
        // sum tables index a = j1 + j2 (coordinate (a - n) dx); difference
        // tables index a = j1 - j2 + (n - 1) (coordinate (a - n + 1) dx)
        const double sx = (static_cast<double>(a) - n) * ax.spacing;
        const double dxv = (static_cast<double>(a) - n + 1) * ax.spacing;
        for (int b = 0; b < nd; ++b) {
            const double sp = (static_cast<double>(b) - n) * ap.spacing;
            const double dpv = (static_cast<double>(b) - n + 1) * ap.spacing;
            ext[a * static_cast<std::size_t>(nd) + static_cast<std::size_t>(b)] =
                w.extracule_factor(sx / kSqrt2, sp / kSqrt2);
            intr[a * static_cast<std::size_t>(nd) + static_cast<std::size_t>(b)] =
                w.intracule_factor(dxv / kSqrt2, dpv / kSqrt2);
        }
    });

    SampledField W({ax, ax, ap, ap});
    auto wv = W.values();
    const std::size_t N = static_cast<std::size_t>(n);
    parallel_for(N * N, exec, [&](std::size_t unit) {
        const std::size_t j1 = unit / N, j2 = unit % N;
        const std::size_t a_ext = j1 + j2;                // sum index
        const std::size_t a_int = j1 - j2 + (N - 1);      // difference index
        for (std::size_t k1 = 0; k1 < N; ++k1) {
            const std::size_t row = ((j1 * N + j2) * N + k1) * N;
            for (std::size_t k2 = 0; k2 < N; ++k2) {
                const std::size_t b_ext = k1 + k2;
                const std::size_t b_int = k1 - k2 + (N - 1);
                wv[row + k2] = ext[a_ext * static_cast<std::size_t>(nd) + b_ext] *
                               intr[a_int * static_cast<std::size_t>(nd) + b_int];
            }
        }
    });
    return WignerFunction(2, std::move(W));
}

SampledField gamma(int m, double mu, const Grid2& grid, Exec exec) {
    if (m < 0) throw std::invalid_argument("gamma: order must be non-negative");
    if (!(mu > 0.0)) throw std::invalid_argument("gamma: mu must be positive");
    const Axis ar = make_axis(grid.n_points, grid.dr);
    const Axis ap = dual_axis(ar);
    const HarmoniumWigner w(HarmoniumParams{mu * mu, 0.0}, EigenIndex{0, m});
    SampledField f({ar, ap});
    const int n = ar.n_points;
    parallel_for(static_cast<std::size_t>(n), exec, [&](std::size_t i) {
        const double r = ar.coordinate(static_cast<int>(i));
        for (int c = 0; c < n; ++c)
            f.at(static_cast<int>(i), c) = w.intracule_factor(r, ap.coordinate(c));
    });
    SampledField g = half_angle_transform_axis(f, 0, +1, exec);
    if (m % 2 != 0) g *= -1.0;
    return g;
}

double gamma_parity_residual(int m, double mu, const Grid2& grid, Exec exec) {
    SampledField g = gamma(m, mu, grid, exec);
    const int n = g.axis(0).n_points;
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    double num = 0.0, den = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const cplx x = g.at(a, b);
            num = std::max(num, std::abs(x - sign * g.at(b, a)));
            den = std::max(den, std::abs(x));
        }
    return den > 0.0 ? num / den : 0.0;
}

double generating_function_residual(double mu, double x, int M, const Grid2& grid, Exec exec) {
    if (!(mu > 0.0)) throw std::invalid_argument("generating function: mu must be positive");
    if (!(x >= 0.0) || !(x < 1.0))
        throw std::invalid_argument("generating function: x must lie in [0, 1)");
    if (M < 0) throw std::invalid_argument("generating function: M must be non-negative");

    const Axis ar = make_axis(grid.n_points, grid.dr);
    const Axis ap = dual_axis(ar);
    SampledField series({ap, ap});  // (v, p); v grid equals the p grid by construction
    double xm = 1.0;
    for (int m = 0; m <= M; ++m) {
        SampledField g = gamma(m, mu, grid, exec);
        g *= xm;
        series += g;
        xm *= x;
    }
    const double pref = 1.0 / std::sqrt(kPi * mu * (1.0 - x * x));
    const double cp = (1.0 + x) / (1.0 - x) / mu;
    const double cv = (1.0 - x) / (1.0 + x) / mu;
    const int n = ap.n_points;
    double num = 0.0, den = 0.0;
    for (int a = 0; a < n; ++a) {
        const double v = ap.coordinate(a);
        for (int b = 0; b < n; ++b) {
            const double p = ap.coordinate(b);
            const double closed = pref * std::exp(-cp * p * p - cv * v * v);
            num = std::max(num, std::abs(series.at(a, b) - closed));
            den = std::max(den, std::abs(closed));
        }
    }
    return num / den;
}

StatisticsVerdict statistics_of_eigenstate(const HarmoniumParams& params, const EigenIndex& idx,
                                           int n_points, double tol, Exec exec) {
    const PairGrid grid = harmonium_grid(params, n_points);
    const WignerFunction w = sample_eigen_wigner(params, idx, grid, exec);
    return classify(w, tol, exec);
}

}  // namespace wig
