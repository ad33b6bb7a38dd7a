#pragma once

#include <vector>

#include "hexfour/lattice.hpp"
#include "hexfour/mat.hpp"
#include "hexfour/summation.hpp"
#include "hexfour/triangle.hpp"

namespace hexfour {

/// A point of the deltoid region in the complex plane, stored as (x, y).
struct DeltoidPoint {
    double x = 0.0;
    double y = 0.0;
};

/// The degree-one invariant z(t) = tc((0,1,-1), t), mapping the triangle
/// onto the region bounded by a deltoid curve. z_of(0) = 1 and the triangle
/// centroid maps to 0.
cplx z_of(const HPoint& t);

/// The quartic that is positive inside the deltoid region and zero on its
/// boundary: -3 (x^2 + y^2 + 1)^2 + 8 (x^3 - 3 x y^2) + 4.
double deltoid_boundary(double x, double y);

/// The Jacobian |d(x, y) / d(t1, t2)| of z_of,
/// (16/27) pi^2 |sin(pi t1) sin(pi t2) sin(pi (t1 + t2))|.
double deltoid_jacobian(const HPoint& t);

/// The weight w_alpha(x, y) = (4/27)^alpha pi^{4 alpha} deltoid_boundary^alpha.
/// Throws std::domain_error outside the region, or on the boundary when
/// alpha < 0.
double weight_w(double alpha, double x, double y);

enum class ChebKind { first, second };
enum class ChebScaling { classical, orthonormal };

/// Rows 0..m of the two-variable Chebyshev family evaluated at (z, w), where
/// w stands for the conjugate variable; pass w = conj(z) to evaluate at a
/// point of the region. Row r holds the r+1 members of total degree r,
/// indexed so that entry k carries z-degree r-k at the top degree.
///
/// classical scaling starts from 1; z, w (first kind) or 3z, 3w (second
/// kind). orthonormal scaling multiplies row entries by sqrt(3) at the ends
/// and sqrt(6) inside (first kind, rows >= 1) or by sqrt(6) everywhere
/// (second kind), which normalizes them in the weighted inner products the
/// two kinds are orthogonal under (weight exponent -1/2 and +1/2).
std::vector<std::vector<cplx>> cheb_rows(ChebKind kind, ChebScaling scaling, int m, cplx z,
                                         cplx w);

/// The second-kind member of degree m and index k evaluated through the
/// quotient ts((k+1, m-k+1, -m-2), t) / ts((1, 1, -2), t). Throws
/// std::domain_error when the denominator is smaller than 1e-10 in absolute
/// value (the quotient itself extends continuously; this route does not).
cplx cheb_u_via_trig(int k, int m, const HPoint& t);

/// Coefficient matrices of the three-term relations of the orthonormal
/// first-kind rows P_m:
///   z P_m = A P_{m+1} + B P_m + C P_{m-1}
///   w P_m = C'^T P_{m+1} + B^T P_m + A'^T P_{m-1}
/// where A', B, C' are the matrices of degrees m-1, m, m+1. Shapes:
/// a is (m+1) x (m+2), b is (m+1) x (m+1), c is (m+1) x m.
struct RecurrenceMatrices {
    int m = 0;
    Mat a;
    Mat b;
    Mat c;
};

RecurrenceMatrices recurrence_matrices(int m);

/// Max residual of both three-term relations over degrees 0..max_m-1 at
/// formal arguments (z, w).
double three_term_residual(int max_m, cplx z, cplx w);

/// The reproducing kernel of the first-kind orthonormal rows up to degree n:
/// K_n(z, w) = sum_{m <= n} P_m(z)^T conj(P_m(w)), with each row evaluated
/// conjugate-consistently at its own argument.
cplx repro_kernel(int n, cplx z, cplx w);

/// Residual of the Christoffel-Darboux identity
///   (z - w) K_n(z, w) = P_{n+1}(z)^T A_n^T conj(P_n(w))
///                     - P_n(z)^T C_{n+1}^T conj(P_{n+1}(w)).
double christoffel_darboux_residual(int n, cplx z, cplx w);

/// The degree n+1 polynomials vanishing on the lobatto node set Y_n,
/// Q_{n+1} = P_{n+1} - gamma0 P_n - gamma1 P_{n-1}. Requires n >= 1.
struct IdealBasis {
    int n = 0;
    Mat gamma0;
    Mat gamma1;
};

IdealBasis ideal_basis(int n);

/// The n+2 entries of Q_{n+1} at formal arguments (z, w).
std::vector<cplx> ideal_eval(const IdealBasis& basis, cplx z, cplx w);

/// max |Q_{n+1}| at z_of(t).
double ideal_residual(const IdealBasis& basis, const HPoint& t);

/// A real orthonormal basis of polynomials in (x, y) through degree
/// max_degree, evaluated at p and grouped by degree: degree d contributes
/// sqrt(2) re and sqrt(2) im of the first-kind orthonormal entries below the
/// middle, plus the middle entry itself when d is even.
std::vector<std::vector<double>> real_basis(int max_degree, const DeltoidPoint& p);

/// A cubature rule on the deltoid region for the normalized weighted
/// integral matching integrate_deltoid. kappa = 1 / (sum of weights) is the
/// constant relating the weight normalization to 1.
struct DeltoidCubature {
    int n = 0;
    int degree = 0;
    double kappa = 0.0;
    std::vector<FreqIndex> indices;
    std::vector<HPoint> preimages;
    std::vector<DeltoidPoint> nodes;
    std::vector<double> weights;
};

/// The minimal rule for weight exponent +1/2: n(n+1)/2 nodes at the images
/// of the interior grid of size n+2, weights
/// (32 / (9 (n+2)^2)) sin^2(pi j1/(n+2)) sin^2(pi j2/(n+2))
///                    sin^2(pi (j1+j2)/(n+2)),
/// exact on all polynomials of degree 2n - 1.
DeltoidCubature gauss_cubature_deltoid(int n);

/// The rule for weight exponent -1/2 with nodes at the images of the full
/// triangle grid of size n and weights lambda_j / 3n^2, exact on all
/// polynomials of degree 2n - 1.
DeltoidCubature lobatto_cubature_deltoid(int n);

/// Which node family a polynomial sample vector refers to.
enum class PolyNodeSet { gauss, lobatto };

/// Samples of a function at the nodes of the corresponding cubature rule,
/// ordered like its indices.
struct DeltoidSamples {
    int n = 0;
    PolyNodeSet nodes = PolyNodeSet::gauss;
    std::vector<cplx> values;
};

/// Evaluates the polynomial interpolant at z (with conj(z) as the second
/// variable). Gauss samples produce the degree n-1 interpolant
///   sum_j f_j mu_j K^U_{n-1}(z, z_j)
/// built from the second-kind kernel; lobatto samples produce the degree n
/// interpolant with cardinal functions kernel_phi(n, z, z_j) normalized by
/// the diagonal.
cplx interp_poly(const DeltoidSamples& samples, cplx z);

/// The lobatto interpolation kernel
///   (1/2) [K_n + K_{n-1}] - (1/2) [T(z) conj(T(w)) + conj(T(z)) T(w)]
/// with T the classical first-kind entry of degree n and index 0. Vanishes
/// when z and w are distinct lobatto nodes of size n.
cplx kernel_phi(int n, cplx z, cplx w);

/// Max |kernel_phi(n, z_j, z_k)| over distinct lobatto nodes of size n.
double kernel_phi_offdiag_residual(int n);

}  // namespace hexfour
