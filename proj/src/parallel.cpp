#include "wigstat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace wig {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
constexpr std::size_t kChunk = 4096;
}  // namespace

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_max_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

template <typename T>
static T chunked_sum_impl(std::span<const T> v, Exec exec) {
    const std::size_t n = v.size();
    if (n == 0) return T{};
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<T> partial(nchunks);
    parallel_for(nchunks, exec, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += v[i];
        partial[c] = acc;
    });
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

std::complex<double> chunked_sum(std::span<const std::complex<double>> v, Exec exec) {
    return chunked_sum_impl(v, exec);
}

double chunked_sum(std::span<const double> v, Exec exec) { return chunked_sum_impl(v, exec); }

double max_abs(std::span<const std::complex<double>> v, Exec exec) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_for(nchunks, exec, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(v[i]));
        partial[c] = m;
    });
    double m = 0.0;
    for (double p : partial) m = std::max(m, p);
    return m;
}

}  // namespace wig
