#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <vector>

namespace dtwist::model {

enum class Exec { Serial, Parallel };

namespace detail {
inline void fold_max(std::vector<double>& acc, const std::vector<double>& v) {
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (std::isnan(v[k]) || v[k] > acc[k]) acc[k] = v[k];
}
}  // namespace detail

/**
 * Slot-wise max over i in [0, n) of the values f(i, out) writes into
 * out[0..slots). NaN wins, so a broken sample cannot hide. The serial and
 * OpenMP versions return the same numbers: max is order independent.
 */
template <class F>
std::vector<double> max_reduce(std::size_t n, std::size_t slots, Exec exec, const F& f) {
    std::vector<double> acc(slots, 0.0);
    if (exec == Exec::Serial) {
        std::vector<double> v(slots);
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(v.begin(), v.end(), 0.0);
            f(i, v.data());
            detail::fold_max(acc, v);
        }
        return acc;
    }
    std::exception_ptr err;
#pragma omp parallel
    {
        std::vector<double> local(slots, 0.0), v(slots);
#pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                std::fill(v.begin(), v.end(), 0.0);
                f(static_cast<std::size_t>(i), v.data());
                detail::fold_max(local, v);
            } catch (...) {
#pragma omp critical(dtwist_max_reduce_error)
                if (!err) err = std::current_exception();
            }
        }
#pragma omp critical(dtwist_max_reduce)
        detail::fold_max(acc, local);
    }
    if (err) std::rethrow_exception(err);
    return acc;
}

}  // namespace dtwist::model
