#pragma once

#include <vector>

#include "hexfour/hex_fourier.hpp"
#include "hexfour/lattice.hpp"
#include "hexfour/summation.hpp"

namespace hexfour {

/// True when k lies in the triangle index cone k1, k2 >= 0 >= k3.
bool in_lambda(const FreqIndex& k);

/// The unique representative of the group orbit of k inside the cone.
FreqIndex canonical_orbit_rep(const FreqIndex& k);

/// The even symmetrization of the lattice exponential,
/// tc(k, t) = (1/6) sum_g phi(k, t g). Invariant in both arguments:
/// tc(k g, t) = tc(k, t h) = tc(k, t).
cplx tc(const FreqIndex& k, const HPoint& t);

/// The odd symmetrization, ts(k, t) = (1/6i) sum_g sign(g) phi(k, t g).
/// Changes by sign(g) under the action on either argument and vanishes
/// identically when any component of k is zero.
cplx ts(const FreqIndex& k, const HPoint& t);

/// Closed three-term evaluation of tc:
/// (1/3) [ e^{i pi (k2-k3)(t2-t3)/3} cos(k1 pi t1)
///       + e^{i pi (k2-k3)(t3-t1)/3} cos(k1 pi t2)
///       + e^{i pi (k2-k3)(t1-t2)/3} cos(k1 pi t3) ].
cplx tc_cos_form(const FreqIndex& k, const HPoint& t);

/// Closed three-term evaluation of ts (the same expression with sines).
cplx ts_sin_form(const FreqIndex& k, const HPoint& t);

/// Which discrete inner product over the triangle grid to use.
///
/// `full` runs over the whole family tri_full with the node weights lambda:
///   (1 / 3n^2) sum_{j in tri_full} lambda_j f(j/n) conj(g(j/n)).
/// It matches the continuous inner product on products of tc functions of
/// total degree below n; at degree exactly n the aliased diagonal entries
/// grow by a known factor (see the tests).
///
/// `interior` runs over tri_interior with constant weight:
///   (2 / n^2) sum_{j in tri_interior} f(j/n) conj(g(j/n)),
/// which matches the continuous inner product on the span of the ts family.
enum class TriInner { full, interior };

template <class F, class G>
cplx inner_triangle(F&& f, G&& g, int n, TriInner variant) {
    if (variant == TriInner::full) {
        const std::vector<FreqIndex> idx = enumerate_indices(IndexSet::tri_full, n);
        const double scale = 1.0 / (3.0 * n * n);
        return scale * pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
                   const HPoint p = node_point(idx[i], n);
                   const double lam = classify(idx[i], n, Domain::triangle).weight_lambda;
                   return lam * f(p) * std::conj(g(p));
               });
    }
    const std::vector<FreqIndex> idx = enumerate_indices(IndexSet::tri_interior, n);
    const double scale = 2.0 / (static_cast<double>(n) * n);
    return scale * pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
               const HPoint p = node_point(idx[i], n);
               return f(p) * std::conj(g(p));
           });
}

/// Which triangle node family a sample vector refers to.
enum class TriNodeSet { full, interior };

/// Samples on the triangle grid j / n, ordered like enumerate_indices.
struct TriSamples {
    int n = 0;
    TriNodeSet nodes = TriNodeSet::full;
    std::vector<cplx> values;
};

template <class F>
TriSamples sample_triangle(F&& f, int n, TriNodeSet nodes) {
    const IndexSet kind = nodes == TriNodeSet::full ? IndexSet::tri_full : IndexSet::tri_interior;
    TriSamples s;
    s.n = n;
    s.nodes = nodes;
    const std::vector<FreqIndex> idx = enumerate_indices(kind, n);
    s.values.reserve(idx.size());
    for (const FreqIndex& j : idx) s.values.push_back(f(node_point(j, n)));
    return s;
}

/// Cardinal function of sine interpolation at the interior node j / n:
/// (2 / n^2) P^- [theta(n-1) - theta(n-2)] (t - j/n), where P^- acts on t.
/// Equals (12 / n^2) sum_{k in tri_interior} ts(k, t) conj(ts(k, j/n)).
double sine_kernel(int n, const FreqIndex& j, const HPoint& t);

/// Cardinal function of cosine interpolation at the node j / n:
///   (lambda_j / 3n^2) [ (1/2) P^+ (theta(n) - theta(n-2)) (t - j/n)
///                       - re( tc(v, t) conj(tc(v, j/n)) ) ],  v = (n, 0, -n).
double cosine_kernel(int n, const FreqIndex& j, const HPoint& t);

/// Definitional form of cosine_kernel, lambda_j P^+ phi_star_kernel(t - j/n),
/// kept as an independent route for validation.
double cosine_kernel_reference(int n, const FreqIndex& j, const HPoint& t);

/// Interpolates interior-node samples with sine_kernel translates. The result
/// matches the samples at every interior node and reproduces every ts(k, .)
/// with k in tri_interior. Requires n >= 3 (smaller n have no interior nodes).
cplx interp_triangle_sine(const TriSamples& samples, const HPoint& t);

/// Interpolates full-family samples with cosine_kernel cardinal functions.
/// Matches the samples at every node of tri_full and reproduces every
/// tc(k, .) with k in tri_full, constants included.
cplx interp_triangle_cosine(const TriSamples& samples, const HPoint& t);

/// A positive cubature rule on the triangle for the normalized integral
/// 2 int_triangle f dt.
struct CubatureRule {
    int degree = 0;
    std::vector<FreqIndex> indices;
    std::vector<HPoint> nodes;
    std::vector<double> weights;
};

/// Applies the rule: sum_j weights[j] f(nodes[j]).
template <class F>
cplx apply_cubature(const CubatureRule& rule, F&& f) {
    return pairwise_accumulate<cplx>(rule.nodes.size(), [&](std::size_t i) {
        return rule.weights[i] * f(rule.nodes[i]);
    });
}

/// The grid rule with nodes j / n over tri_full and weights lambda_j / 3n^2.
/// Exact for every tc(k, .) with total degree -k3 <= 2n - 1; the first
/// failures occur at degree 2n.
CubatureRule triangle_cubature(int n);

enum class TriInterp { sine, cosine };

/// Max over a probe grid of the sum of |cardinal function| values, the
/// operator norm of the chosen interpolation. The grid consists of the
/// points (a, b, -(a+b)) / grid with a, b >= 0, a + b <= grid, plus the
/// interpolation nodes.
double lebesgue_constant_triangle(int n, TriInterp variant, int grid);

}  // namespace hexfour
