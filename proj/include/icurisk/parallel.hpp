#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icurisk {

// Global worker cap. 0 = hardware default. Affects timings only, never
// results: every parallel_for body writes to its own output slot and pulls
// randomness from a seed derived from its index.
int max_threads();
void set_max_threads(int n);

namespace detail {
int effective_threads(int requested);
}

// Runs body(i) for i in [0, n). threads <= 1 runs the plain serial loop;
// this serial path is the reference the tests compare the OpenMP path against.
template <class F>
void parallel_for_threads(std::size_t n, int threads, F&& body) {
    const int t = detail::effective_threads(threads);
#ifdef _OPENMP
    if (t > 1 && n > 1 && !omp_in_parallel()) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(t)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(icurisk_parallel_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    (void)t;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
    parallel_for_threads(n, max_threads(), std::forward<F>(body));
}

} // namespace icurisk
