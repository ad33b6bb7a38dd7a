#pragma once

#include <vector>

#include "hexfour/lattice.hpp"
#include "hexfour/summation.hpp"

namespace hexfour {

/// The lattice exponential exp((2 pi i / 3) k . t).
cplx phi(const FreqIndex& k, const HPoint& t);

/// Theta_n(t): the product over the pairs (t1,t2), (t2,t3), (t3,t1) of
/// sin((n+1) pi u / 3) / sin(pi u / 3) with u the coordinate difference.
/// Defined for n >= -1 (Theta_{-1} = 0, Theta_0 = 1, Theta_n(0) = (n+1)^3).
/// Near zeros of a denominator the factor is evaluated as the equivalent
/// cosine sum, so the function is finite everywhere.
double theta(int n, const HPoint& t);

/// The Dirichlet kernel sum of phi_k over the symmetric family (size
/// 3n^2 + 3n + 1); equals theta(n, t) - theta(n - 1, t) and is real.
double dirichlet(int n, const HPoint& t);

/// The interpolation kernel of the fundamental family:
/// (1 / 3n^2) sum of phi_k over hex_fundamental. Complex because that family
/// is not symmetric under negation.
cplx phi_kernel(int n, const HPoint& t);

/// The interpolation kernel of the symmetric family with boundary weights:
/// (1 / 3n^2) sum of c_k phi_k over hex_symmetric. Evaluated in closed form
///   (1 / 3n^2) [ (theta_n - theta_{n-2}) / 2 - V_n / 3 ],
/// where V_n(t) = cos(2 n pi (t1-t2)/3) + cos(2 n pi (t2-t3)/3)
///              + cos(2 n pi (t3-t1)/3). Satisfies phi_star_kernel(n, 0) = 1.
double phi_star_kernel(int n, const HPoint& t);

/// Discrete inner product over the fundamental grid:
/// (1 / 3n^2) sum_{j in hex_fundamental} f(j/n) conj(g(j/n)).
template <class F, class G>
cplx inner_n(F&& f, G&& g, int n) {
    const std::vector<FreqIndex> idx = enumerate_indices(IndexSet::hex_fundamental, n);
    const double scale = 1.0 / (3.0 * n * n);
    return scale * pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
               const HPoint p = node_point(idx[i], n);
               return f(p) * std::conj(g(p));
           });
}

/// Discrete inner product over the symmetric grid with boundary weights:
/// (1 / 3n^2) sum_{j in hex_symmetric} c_j f(j/n) conj(g(j/n)). Agrees with
/// inner_n whenever f conj(g) is periodic under the hexagonal lattice.
template <class F, class G>
cplx inner_n_star(F&& f, G&& g, int n) {
    const std::vector<FreqIndex> idx = enumerate_indices(IndexSet::hex_symmetric, n);
    const double scale = 1.0 / (3.0 * n * n);
    return scale * pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
               const HPoint p = node_point(idx[i], n);
               const double c = classify(idx[i], n, Domain::hexagon).weight_c;
               return c * f(p) * std::conj(g(p));
           });
}

/// Which hexagon node family a sample vector refers to.
enum class HexNodeSet { fundamental, symmetric };

/// Samples of a function on the grid j / n, ordered like enumerate_indices.
struct HexSamples {
    int n = 0;
    HexNodeSet nodes = HexNodeSet::fundamental;
    std::vector<cplx> values;
};

template <class F>
HexSamples sample_hex(F&& f, int n, HexNodeSet nodes) {
    const IndexSet kind =
        nodes == HexNodeSet::fundamental ? IndexSet::hex_fundamental : IndexSet::hex_symmetric;
    HexSamples s;
    s.n = n;
    s.nodes = nodes;
    const std::vector<FreqIndex> idx = enumerate_indices(kind, n);
    s.values.reserve(idx.size());
    for (const FreqIndex& j : idx) s.values.push_back(f(node_point(j, n)));
    return s;
}

/// Evaluates the interpolant of the samples at t.
///
/// Fundamental samples use phi_kernel and reproduce every function in the
/// span of the fundamental exponentials, matching all samples. Symmetric
/// samples use phi_star_kernel translates; the result matches samples at
/// interior nodes, while at a boundary node it takes the sum of the samples
/// over that node's congruence class (2 nodes on edges, 3 on vertices).
cplx interp_hex(const HexSamples& samples, const HPoint& t);

/// Max over a probe grid of sum_j |phi_star_kernel(n, t - j/n)|, the operator
/// norm of symmetric interpolation on the hexagon. The grid consists of the
/// points j / grid for j in hex_symmetric at size `grid`, plus the
/// interpolation nodes themselves.
double lebesgue_constant(int n, int grid);

}  // namespace hexfour
