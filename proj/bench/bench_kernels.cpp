// Timing harness comparing the serial reference path of each data-parallel
// kernel against the threaded path, and checking that both produce the same
// bits.

#include <chrono>
#include <cstdio>
#include <numbers>

#include "wigstat/gaussian.hpp"
#include "wigstat/harmonium.hpp"
#include "wigstat/statistics.hpp"
#include "wigstat/wigner.hpp"

using namespace wig;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

struct Row {
    const char* name;
    double serial_ms;
    double parallel_ms;
    double max_diff;
};

void print(const Row& r) {
    std::printf("%-34s %10.1f %10.1f %8.2fx   %s\n", r.name, r.serial_ms, r.parallel_ms,
                r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.max_diff == 0.0 ? "bitwise-equal" : "DIFFERS");
}

template <typename F>
Row compare(const char* name, F&& fn) {
    const auto t0 = clock_type::now();
    SampledField a = fn(Exec::Serial);
    const double ts = ms_since(t0);
    const auto t1 = clock_type::now();
    SampledField b = fn(Exec::Parallel);
    const double tp = ms_since(t1);
    return Row{name, ts, tp, max_abs_diff(a, b, Exec::Serial)};
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 32;
    if (!is_power_of_two(n) || n < 8) {
        std::fprintf(stderr, "usage: bench_kernels [per-axis points, power of two >= 8]\n");
        return 1;
    }
    std::printf("per-body grid: %d points per axis (%d threads available)\n\n", n, max_threads());
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial/ms", "openmp/ms", "speedup");

    const GaussianOrbital o1 = make_orbital(1.0, 0.3);
    const GaussianOrbital o2 = make_orbital(2.0, -0.2);
    const PairGrid grid = pair_grid_for(o1, o2, n);

    print(compare("pair quasidensity materialize", [&](Exec e) {
        return pair_quasidensity(o1, o2, +1, grid, e).data();
    }));

    const WignerFunction w = pair_quasidensity(o1, o2, +1, grid);
    const HarmoniumParams hp = make_harmonium(2.0, 1.0);
    print(compare("harmonium eigenstate materialize", [&](Exec e) {
        return sample_eigen_wigner(hp, EigenIndex{1, 2}, harmonium_grid(hp, n), e).data();
    }));

    print(compare("batched transform (4-axis field)", [&](Exec e) {
        return half_angle_transform_axis(w.data(), 1, +1, e);
    }));

    const DensityMatrix rho = [&] {
        const Axis ax = make_axis(4 * n, 0.05);
        SampledField psi({ax});
        for (int i = 0; i < ax.n_points; ++i) {
            const double x = ax.coordinate(i);
            psi.at(i) = std::exp(-0.5 * x * x) * std::numbers::inv_sqrtpi;
        }
        return DensityMatrix::from_wavefunction(psi);
    }();
    print(compare("1-body Wigner transform (4n grid)", [&](Exec e) {
        return wigner_from_density(rho, e).data();
    }));

    {
        const auto t0 = clock_type::now();
        const StatisticsVerdict vs = classify(w, 1e-6, Exec::Serial);
        const double ts = ms_since(t0);
        const auto t1 = clock_type::now();
        const StatisticsVerdict vp = classify(w, 1e-6, Exec::Parallel);
        const double tp = ms_since(t1);
        const bool same = vs.classification == vp.classification &&
                          vs.residual_sym == vp.residual_sym &&
                          vs.residual_antisym == vp.residual_antisym;
        Row r{"classification slice sweep", ts, tp, same ? 0.0 : 1.0};
        print(r);
    }
    return 0;
}
