#pragma once

#include <exception>
#include <vector>

namespace folindex {

enum class Exec { Serial, Parallel };

/// fn(i) for every i < n, serially or with OpenMP. Exceptions are collected
/// and the one with the lowest index is rethrown, so both modes fail alike.
template <class R, class Fn>
std::vector<R> map_indexed(size_t n, Fn&& fn, Exec exec) {
    std::vector<R> out(n);
    std::vector<std::exception_ptr> err(n);
    const long count = static_cast<long>(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) {
            try {
                out[static_cast<size_t>(i)] = fn(static_cast<size_t>(i));
            } catch (...) {
                err[static_cast<size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (long i = 0; i < count; ++i) {
            try {
                out[static_cast<size_t>(i)] = fn(static_cast<size_t>(i));
            } catch (...) {
                err[static_cast<size_t>(i)] = std::current_exception();
            }
        }
    }
    for (const auto& e : err)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace folindex
