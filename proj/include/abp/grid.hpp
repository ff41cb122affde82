#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace abp::grid {

// Serial reference: evaluate f(i) for i in [0, n) in index order.
template <class T, class F>
std::vector<T> map_serial(std::size_t n, F&& f) {
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

// OpenMP map over independent points. Results land in index order no matter
// how iterations are scheduled, so output files are byte-stable. workers <= 0
// picks the OpenMP default. Exceptions are captured in-thread and rethrown
// once after the region.
template <class T, class F>
std::vector<T> map_parallel(std::size_t n, F&& f, int workers = 0) {
#ifdef _OPENMP
    std::vector<T> out(n);
    std::exception_ptr err;
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
    for (long long i = 0; i < (long long)n; ++i) {
        try {
            out[(std::size_t)i] = f((std::size_t)i);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
#else
    (void)workers;
    return map_serial<T>(n, std::forward<F>(f));
#endif
}

}  // namespace abp::grid
