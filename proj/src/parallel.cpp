#include "icurisk/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icurisk {

namespace {
std::atomic<int> g_max_threads{0};
}

int max_threads() {
    const int cap = g_max_threads.load();
    if (cap > 0) return cap;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0); }

namespace detail {
int effective_threads(int requested) {
    const int cap = g_max_threads.load();
    int t = requested;
    if (cap > 0 && (t <= 0 || t > cap)) t = cap;
    if (t <= 0) t = max_threads();
    return t;
}
} // namespace detail

} // namespace icurisk
