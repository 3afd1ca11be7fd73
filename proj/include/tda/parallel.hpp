#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tda {

// Execution policy for the per-window kernels. The serial path is the
// reference implementation; the OpenMP path must produce identical results
// (each index is an independent computation, merged by position).
struct Exec {
    bool parallel = true;
    int threads = 0; // 0 -> runtime default

    static Exec serial() { return {false, 1}; }
};

template <typename Fn>
void for_each_index(std::size_t n, const Exec& exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec.parallel && n > 1) {
        const int nt = exec.threads > 0 ? exec.threads : omp_get_max_threads();
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(tda_for_each_index_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

} // namespace tda
