#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gaidec {

// Global switch for the OpenMP code paths. Kernels compute each output slot
// independently, so results are bitwise identical with the switch on or off;
// the benchmark tool flips it to time both paths.
bool parallel_enabled();
void set_parallel_enabled(bool on);

// Runs body(i) for i in [0, count). body must write only to slots owned by
// iteration i.
template <class Body>
void parallel_for(std::size_t count, const Body& body) {
#ifdef _OPENMP
    if (parallel_enabled()) {
        const long long m = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < m; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

} // namespace gaidec
