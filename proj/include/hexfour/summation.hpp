#pragma once

#include <complex>
#include <cstddef>
#include <utility>

namespace hexfour {

using cplx = std::complex<double>;

namespace detail {

template <class T, class F>
T pairwise_accumulate_range(std::size_t first, std::size_t count, F& term) {
    if (count == 0) return T{};
    if (count <= 8) {
        T s = term(first);
        for (std::size_t i = 1; i < count; ++i) s += term(first + i);
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_accumulate_range<T>(first, half, term) +
           pairwise_accumulate_range<T>(first + half, count - half, term);
}

}  // namespace detail

/// Sums term(0), ..., term(count - 1) with a pairwise reduction tree.
///
/// The tree shape depends only on count, so a given sequence of terms always
/// produces bit-identical results, and rounding error grows like O(log count)
/// instead of O(count).
template <class T, class F>
T pairwise_accumulate(std::size_t count, F&& term) {
    F& t = term;
    return detail::pairwise_accumulate_range<T>(0, count, t);
}

}  // namespace hexfour
