#include "hexfour/triangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexfour {

bool in_lambda(const FreqIndex& k) { return k.k1 >= 0 && k.k2 >= 0 && k.k3 <= 0; }

FreqIndex canonical_orbit_rep(const FreqIndex& k) {
    bool found = false;
    FreqIndex rep;
    for (GroupElement g : group_elements) {
        const FreqIndex image = act(g, k);
        if (!in_lambda(image)) continue;
        if (found && !(image == rep))
            throw std::logic_error("canonical_orbit_rep: orbit meets the cone twice");
        rep = image;
        found = true;
    }
    if (!found) throw std::logic_error("canonical_orbit_rep: orbit misses the cone");
    return rep;
}

cplx tc(const FreqIndex& k, const HPoint& t) {
    return project(
        1, [&k](const HPoint& u) { return phi(k, u); }, t);
}

cplx ts(const FreqIndex& k, const HPoint& t) {
    const cplx odd = project(
        -1, [&k](const HPoint& u) { return phi(k, u); }, t);
    return odd / cplx(0.0, 1.0);
}

namespace {

cplx three_term_form(const FreqIndex& k, const HPoint& t, bool cosine) {
    const double pi = std::numbers::pi;
    const double mu = pi * (k.k2 - k.k3) / 3.0;
    const double c[3] = {t.t1, t.t2, t.t3};
    const double diff[3] = {c[1] - c[2], c[2] - c[0], c[0] - c[1]};
    cplx sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double trig =
            cosine ? std::cos(k.k1 * pi * c[i]) : std::sin(k.k1 * pi * c[i]);
        sum += std::polar(1.0, mu * diff[i]) * trig;
    }
    return sum / 3.0;
}

}  // namespace

cplx tc_cos_form(const FreqIndex& k, const HPoint& t) { return three_term_form(k, t, true); }

cplx ts_sin_form(const FreqIndex& k, const HPoint& t) { return three_term_form(k, t, false); }

double sine_kernel(int n, const FreqIndex& j, const HPoint& t) {
    if (n < 3) throw std::invalid_argument("sine_kernel: n must be at least 3");
    const HPoint s = node_point(j, n);
    const double value = project(
        -1, [&](const HPoint& u) { return theta(n - 1, u - s) - theta(n - 2, u - s); }, t);
    return 2.0 * value / (static_cast<double>(n) * n);
}

double cosine_kernel(int n, const FreqIndex& j, const HPoint& t) {
    if (n <= 0) throw std::invalid_argument("cosine_kernel: n must be positive");
    const HPoint s = node_point(j, n);
    const double lam = classify(j, n, Domain::triangle).weight_lambda;
    const double core = project(
        1, [&](const HPoint& u) { return theta(n, u - s) - theta(n - 2, u - s); }, t);
    const FreqIndex v(n, 0, -n);
    const double vertex = std::real(tc(v, t) * std::conj(tc(v, s)));
    return lam / (3.0 * n * n) * (core / 2.0 - vertex);
}

double cosine_kernel_reference(int n, const FreqIndex& j, const HPoint& t) {
    const HPoint s = node_point(j, n);
    const double lam = classify(j, n, Domain::triangle).weight_lambda;
    const double value = project(
        1, [&](const HPoint& u) { return phi_star_kernel(n, u - s); }, t);
    return lam * value;
}

cplx interp_triangle_sine(const TriSamples& samples, const HPoint& t) {
    if (samples.nodes != TriNodeSet::interior)
        throw std::invalid_argument("interp_triangle_sine: samples must be on interior nodes");
    if (samples.n < 3)
        throw std::invalid_argument("interp_triangle_sine: n must be at least 3");
    const std::vector<FreqIndex> idx = enumerate_indices(IndexSet::tri_interior, samples.n);
    if (samples.values.size() != idx.size())
        throw std::invalid_argument("interp_triangle_sine: sample count mismatch");
    return pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
        return samples.values[i] * sine_kernel(samples.n, idx[i], t);
    });
}

cplx interp_triangle_cosine(const TriSamples& samples, const HPoint& t) {
    if (samples.nodes != TriNodeSet::full)
        throw std::invalid_argument("interp_triangle_cosine: samples must be on the full grid");
    const std::vector<FreqIndex> idx = enumerate_indices(IndexSet::tri_full, samples.n);
    if (samples.values.size() != idx.size())
        throw std::invalid_argument("interp_triangle_cosine: sample count mismatch");
    return pairwise_accumulate<cplx>(idx.size(), [&](std::size_t i) {
        return samples.values[i] * cosine_kernel(samples.n, idx[i], t);
    });
}

CubatureRule triangle_cubature(int n) {
    if (n <= 0) throw std::invalid_argument("triangle_cubature: n must be positive");
    CubatureRule rule;
    rule.degree = 2 * n - 1;
    rule.indices = enumerate_indices(IndexSet::tri_full, n);
    const double scale = 1.0 / (3.0 * n * n);
    rule.nodes.reserve(rule.indices.size());
    rule.weights.reserve(rule.indices.size());
    for (const FreqIndex& j : rule.indices) {
        rule.nodes.push_back(node_point(j, n));
        rule.weights.push_back(scale * classify(j, n, Domain::triangle).weight_lambda);
    }
    return rule;
}

double lebesgue_constant_triangle(int n, TriInterp variant, int grid) {
    if (n <= 0 || grid <= 0)
        throw std::invalid_argument("lebesgue_constant_triangle: n and grid must be positive");
    const IndexSet family =
        variant == TriInterp::sine ? IndexSet::tri_interior : IndexSet::tri_full;
    if (variant == TriInterp::sine && n < 3)
        throw std::invalid_argument("lebesgue_constant_triangle: sine variant needs n >= 3");
    const std::vector<FreqIndex> nodes = enumerate_indices(family, n);

    std::vector<HPoint> probes;
    for (const FreqIndex& j : enumerate_indices(IndexSet::tri_full, grid))
        probes.push_back(node_point(j, grid));
    for (const FreqIndex& j : nodes) probes.push_back(node_point(j, n));

    double best = 0.0;
    for (const HPoint& t : probes) {
        double sum = 0.0;
        for (const FreqIndex& j : nodes) {
            sum += std::abs(variant == TriInterp::sine ? sine_kernel(n, j, t)
                                                       : cosine_kernel(n, j, t));
        }
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace hexfour
