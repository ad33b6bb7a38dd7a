#pragma once

#include <functional>
#include <vector>

#include "hexfour/lattice.hpp"

namespace hexfour {

/// Controls the self-refining tensor Gauss-Legendre integrators below.
struct OracleConfig {
    /// Tensor order of the first pass; each refinement doubles it.
    int base_order = 8;
    /// Refinements allowed before std::runtime_error is thrown.
    int max_refinements = 7;
    /// Absolute agreement required between two successive passes.
    double tol = 1e-12;
};

/// Nodes and weights of the p-point Gauss-Legendre rule on [0, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int p);

/// The normalized integral 2 int f over the triangle 0 <= t1, t2, -t3 <= 1
/// (so the constant 1 integrates to 1). The triangle is mapped to the unit
/// square by t1 = u(1 - v), t2 = uv, and the tensor rule is refined until two
/// successive orders agree within config.tol.
cplx integrate_triangle(const std::function<cplx(const HPoint&)>& f,
                        const OracleConfig& config = {});

/// The normalized integral over the hexagon -1 <= t1, t2, -t3 < 1, computed
/// as the mean of the six triangle integrals of f composed with the group
/// elements, whose images tile the hexagon.
cplx integrate_hexagon(const std::function<cplx(const HPoint&)>& f,
                       const OracleConfig& config = {});

/// The normalized weighted integral c_alpha int f w_alpha over the deltoid
/// region, for alpha in {-1/2, +1/2}. Pulled back to the triangle, where the
/// weight and the Jacobian combine into a bounded integrand; the constant 1
/// integrates to 1 for alpha = -1/2 and to 1/6 for alpha = +1/2.
cplx integrate_deltoid(const std::function<cplx(double, double)>& f, double alpha,
                       const OracleConfig& config = {});

}  // namespace hexfour
