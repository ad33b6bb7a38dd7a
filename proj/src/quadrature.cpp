#include "hexfour/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hexfour/summation.hpp"
#include "hexfour/triangle.hpp"

namespace hexfour {

GaussLegendre gauss_legendre(int p) {
    if (p <= 0) throw std::invalid_argument("gauss_legendre: order must be positive");
    GaussLegendre rule;
    rule.nodes.resize(p);
    rule.weights.resize(p);
    for (int i = 0; i < p; ++i) {
        // Chebyshev-angle initial guess for the i-th root of P_p on [-1, 1].
        double x = std::cos(std::numbers::pi * (i + 0.75) / (p + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= p; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = p * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        rule.nodes[i] = (1.0 - x) / 2.0;
        rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

namespace {

// One tensor pass of the triangle integral at the given order.
cplx triangle_pass(const std::function<cplx(const HPoint&)>& f, int order) {
    const GaussLegendre rule = gauss_legendre(order);
    return pairwise_accumulate<cplx>(static_cast<std::size_t>(order) * order,
                                     [&](std::size_t idx) {
                                         const int i = static_cast<int>(idx) / order;
                                         const int j = static_cast<int>(idx) % order;
                                         const double u = rule.nodes[i];
                                         const double v = rule.nodes[j];
                                         const double w = rule.weights[i] * rule.weights[j];
                                         const HPoint t(u * (1.0 - v), u * v);
                                         return 2.0 * w * u * f(t);
                                     });
}

cplx refine(const std::function<cplx(int)>& pass, const OracleConfig& config) {
    if (config.base_order <= 0 || config.max_refinements < 1 || config.tol <= 0.0)
        throw std::invalid_argument("OracleConfig: base_order, max_refinements and tol must be positive");
    int order = config.base_order;
    cplx previous = pass(order);
    for (int r = 0; r < config.max_refinements; ++r) {
        order *= 2;
        const cplx current = pass(order);
        if (std::abs(current - previous) <= config.tol) return current;
        previous = current;
    }
    throw std::runtime_error("quadrature oracle did not converge within the allowed refinements");
}

}  // namespace

cplx integrate_triangle(const std::function<cplx(const HPoint&)>& f, const OracleConfig& config) {
    return refine([&](int order) { return triangle_pass(f, order); }, config);
}

cplx integrate_hexagon(const std::function<cplx(const HPoint&)>& f, const OracleConfig& config) {
    cplx sum = 0.0;
    for (GroupElement g : group_elements) {
        sum += integrate_triangle([&](const HPoint& t) { return f(act(g, t)); }, config);
    }
    return sum / 6.0;
}

cplx integrate_deltoid(const std::function<cplx(double, double)>& f, double alpha,
                       const OracleConfig& config) {
    const bool negative = std::abs(alpha + 0.5) <= 1e-12;
    const bool positive = std::abs(alpha - 0.5) <= 1e-12;
    if (!negative && !positive)
        throw std::invalid_argument("integrate_deltoid: alpha must be -1/2 or +1/2");
    const FreqIndex z_index(0, 1, -1);
    const FreqIndex s_index(1, 1, -2);
    if (negative) {
        // c w |J| = 1 on the pulled-back integrand.
        return integrate_triangle(
            [&](const HPoint& t) {
                const cplx z = tc(z_index, t);
                return f(z.real(), z.imag());
            },
            config);
    }
    // c w |J| = 2 ts(s_index, .)^2, and the triangle integral carries the 2.
    return integrate_triangle(
        [&](const HPoint& t) {
            const cplx z = tc(z_index, t);
            const double s = ts(s_index, t).real();
            return f(z.real(), z.imag()) * (s * s);
        },
        config);
}

}  // namespace hexfour
