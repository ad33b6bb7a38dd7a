#include "hexfour/hex_fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexfour {

namespace {

// Below this the ratio form loses digits to cancellation: the absolute
// rounding of v is amplified by 1 / |sin v|, so the evaluator switches to the
// cosine sum, which is exact for every v and well conditioned.
constexpr double kSinFloor = 1e-4;

// sin((n+1) v) / sin(v), continued across zeros of the denominator by the
// identity sum_{k=0..n} cos((n - 2k) v).
double dirichlet_factor(int n, double v) {
    const double s = std::sin(v);
    if (std::abs(s) >= kSinFloor) return std::sin((n + 1) * v) / s;
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) sum += std::cos((n - 2 * k) * v);
    return sum;
}

}  // namespace

cplx phi(const FreqIndex& k, const HPoint& t) {
    return std::polar(1.0, 2.0 * std::numbers::pi / 3.0 * dot(k, t));
}

double theta(int n, const HPoint& t) {
    if (n < -1) throw std::invalid_argument("theta: n must be >= -1");
    if (n == -1) return 0.0;
    const double third_pi = std::numbers::pi / 3.0;
    const double u12 = third_pi * (t.t1 - t.t2);
    const double u23 = third_pi * (t.t2 - t.t3);
    const double u31 = third_pi * (t.t3 - t.t1);
    return dirichlet_factor(n, u12) * dirichlet_factor(n, u23) * dirichlet_factor(n, u31);
}

double dirichlet(int n, const HPoint& t) {
    if (n < 0) throw std::invalid_argument("dirichlet: n must be >= 0");
    return theta(n, t) - theta(n - 1, t);
}

cplx phi_kernel(int n, const HPoint& t) {
    if (n <= 0) throw std::invalid_argument("phi_kernel: n must be positive");
    const std::vector<FreqIndex> idx = enumerate_indices(IndexSet::hex_fundamental, n);
    const cplx sum =
        pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) { return phi(idx[i], t); });
    return sum / (3.0 * n * n);
}

double phi_star_kernel(int n, const HPoint& t) {
    if (n <= 0) throw std::invalid_argument("phi_star_kernel: n must be positive");
    const double two_pi_n = 2.0 * std::numbers::pi * n / 3.0;
    const double v = std::cos(two_pi_n * (t.t1 - t.t2)) + std::cos(two_pi_n * (t.t2 - t.t3)) +
                     std::cos(two_pi_n * (t.t3 - t.t1));
    const double core = (theta(n, t) - theta(n - 2, t)) / 2.0 - v / 3.0;
    return core / (3.0 * n * n);
}

cplx interp_hex(const HexSamples& samples, const HPoint& t) {
    const IndexSet kind = samples.nodes == HexNodeSet::fundamental
                              ? IndexSet::hex_fundamental
                              : IndexSet::hex_symmetric;
    const std::vector<FreqIndex> idx = enumerate_indices(kind, samples.n);
    if (samples.values.size() != idx.size())
        throw std::invalid_argument("interp_hex: sample count does not match the node family");
    if (samples.nodes == HexNodeSet::fundamental) {
        return pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
            return samples.values[i] * phi_kernel(samples.n, t - node_point(idx[i], samples.n));
        });
    }
    return pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
        return samples.values[i] * phi_star_kernel(samples.n, t - node_point(idx[i], samples.n));
    });
}

double lebesgue_constant(int n, int grid) {
    if (n <= 0 || grid <= 0)
        throw std::invalid_argument("lebesgue_constant: n and grid must be positive");
    const std::vector<FreqIndex> nodes = enumerate_indices(IndexSet::hex_symmetric, n);
    std::vector<HPoint> probes;
    for (const FreqIndex& j : enumerate_indices(IndexSet::hex_symmetric, grid))
        probes.push_back(node_point(j, grid));
    for (const FreqIndex& j : nodes) probes.push_back(node_point(j, n));

    double best = 0.0;
    for (const HPoint& t : probes) {
        double sum = 0.0;
        for (const FreqIndex& j : nodes)
            sum += std::abs(phi_star_kernel(n, t - node_point(j, n)));
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace hexfour
