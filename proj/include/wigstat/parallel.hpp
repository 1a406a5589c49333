#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wig {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// path that performs the identical arithmetic; results are bitwise equal
// between the two policies and independent of the active thread count.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);

int max_threads();
void set_max_threads(int n);

// Parallel loop over [0, count). The body must only touch disjoint state per
// index.
template <typename F>
void parallel_for(std::size_t count, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::Parallel && count > 1) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < count; ++i) body(i);
}

// Summation with a fixed chunk decomposition so the rounding pattern does not
// depend on the thread count: chunks are summed left-to-right internally and
// the chunk results are combined in index order.
std::complex<double> chunked_sum(std::span<const std::complex<double>> v, Exec exec = default_exec());
double chunked_sum(std::span<const double> v, Exec exec = default_exec());

double max_abs(std::span<const std::complex<double>> v, Exec exec = default_exec());

}  // namespace wig
