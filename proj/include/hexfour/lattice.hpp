#pragma once

#include <array>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hexfour/summation.hpp"

namespace hexfour {

/// A point of the plane t1 + t2 + t3 = 0, stored in homogeneous coordinates.
///
/// Working with all three coordinates keeps the three-fold symmetry of the
/// hexagonal lattice explicit: the hexagon, the triangle and the symmetry
/// group below all have coordinate-permutation descriptions in t space.
struct HPoint {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;

    HPoint() = default;

    /// Builds (t1, t2, -(t1 + t2)), which lies on the plane exactly.
    HPoint(double t1_, double t2_) : t1(t1_), t2(t2_), t3(-t1_ - t2_) {}

    /// Builds (t1, t2, t3); throws std::invalid_argument unless
    /// |t1 + t2 + t3| <= 1e-12.
    HPoint(double t1_, double t2_, double t3_);
};

HPoint operator+(const HPoint& a, const HPoint& b);
HPoint operator-(const HPoint& a, const HPoint& b);
HPoint operator*(double s, const HPoint& a);

/// Cartesian coordinates of a plane point.
struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;
};

/// Maps Cartesian (x1, x2) to homogeneous coordinates:
/// t1 = (sqrt(3) x1 - x2) / 2, t2 = x2, t3 = -(sqrt(3) x1 + x2) / 2.
HPoint to_homogeneous(const Vec2& x);

/// Inverse of to_homogeneous: x1 = (t1 - t3) / sqrt(3), x2 = t2.
Vec2 from_homogeneous(const HPoint& t);

/// A frequency index (k1, k2, k3) with k1 + k2 + k3 = 0 exactly.
struct FreqIndex {
    int k1 = 0;
    int k2 = 0;
    int k3 = 0;

    FreqIndex() = default;

    /// Builds (k1, k2, -(k1 + k2)).
    FreqIndex(int k1_, int k2_) : k1(k1_), k2(k2_), k3(-k1_ - k2_) {}

    /// Builds (k1, k2, k3); throws std::invalid_argument unless the sum is 0.
    FreqIndex(int k1_, int k2_, int k3_);

    friend bool operator==(const FreqIndex&, const FreqIndex&) = default;
};

FreqIndex operator+(const FreqIndex& a, const FreqIndex& b);
FreqIndex operator-(const FreqIndex& a, const FreqIndex& b);

/// k1 t1 + k2 t2 + k3 t3.
double dot(const FreqIndex& k, const HPoint& t);

/// The grid point j / n in homogeneous coordinates.
HPoint node_point(const FreqIndex& j, int n);

/// True when a - b has all three components congruent to one common residue
/// mod 3n; such indices generate the same function on the grid with spacing
/// 1 / n. Components must be integers, so this is exact.
bool congruent_mod3n(const FreqIndex& a, const FreqIndex& b, int n);

/// The symmetry group of the homogeneous plane generated by the three
/// reflections s1, s2, s3. Elements act on points from the right:
/// act(compose(a, b), t) == act(b, act(a, t)).
enum class GroupElement { identity, s1, s2, s3, r12, r21 };

inline constexpr std::array<GroupElement, 6> group_elements = {
    GroupElement::identity, GroupElement::s1,  GroupElement::s2,
    GroupElement::s3,       GroupElement::r12, GroupElement::r21};

/// The sign character: -1 for the reflections s1, s2, s3, +1 otherwise.
int group_sign(GroupElement g);

GroupElement compose(GroupElement a, GroupElement b);

/// Inverse element; reflections are involutions, the rotations swap.
GroupElement inverse(GroupElement g);

HPoint act(GroupElement g, const HPoint& t);
FreqIndex act(GroupElement g, const FreqIndex& k);

/// Symmetrizes f over the group at t:
///   (1/6) [f(t) + f(t r12) + f(t r21) + sign (f(t s1) + f(t s2) + f(t s3))]
/// with sign in {+1, -1}. For sign = -1 the result vanishes whenever f is
/// invariant under any single reflection.
template <class F>
auto project(int sign, F&& f, const HPoint& t) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("project: sign must be +1 or -1");
    auto rot = f(t) + f(act(GroupElement::r12, t)) + f(act(GroupElement::r21, t));
    auto ref = f(act(GroupElement::s1, t)) + f(act(GroupElement::s2, t)) +
               f(act(GroupElement::s3, t));
    return (sign > 0 ? rot + ref : rot - ref) / 6.0;
}

/// Which domain an index set or a node classification refers to.
enum class Domain { hexagon, triangle };

/// The standard index families over the hexagonal lattice.
///
///   hex_fundamental   -n <= k1, k2, -k3 < n            (size 3n^2)
///   hex_symmetric     -n <= k1, k2, k3 <= n            (size 3n^2 + 3n + 1)
///   hex_interior      -n <  k1, k2, k3  < n            (size 3n^2 - 3n + 1)
///   tri_full          k1, k2 >= 0 >= k3, -k3 <= n      (size (n+1)(n+2)/2)
///   tri_interior      k1, k2 >= 1, -k3 <= n - 1        (size (n-1)(n-2)/2)
enum class IndexSet { hex_fundamental, hex_symmetric, hex_interior, tri_full, tri_interior };

/// Enumerates the chosen family in lexicographic (k1, k2) order.
std::vector<FreqIndex> enumerate_indices(IndexSet kind, int n);

enum class NodeClass { interior, edge, vertex };

/// Classification of a grid index j with node j / n, together with the node
/// weights used by the discrete inner products and cubature rules.
struct PointClass {
    NodeClass node_class;
    /// Hexagon weight c: 1 interior, 1/2 edge, 1/3 vertex.
    double weight_c;
    /// Triangle weight lambda: 6 interior, 3 edge, 1 vertex.
    double weight_lambda;
};

/// Classifies j within the symmetric hexagon family (domain hexagon,
/// membership -n <= k1, k2, k3 <= n) or the full triangle family (domain
/// triangle, membership k1, k2 >= 0 >= k3 >= -n). Throws
/// std::invalid_argument when j lies outside the set.
PointClass classify(const FreqIndex& j, int n, Domain domain);

/// Checks f(t + e) == f(t) within tol for the three period shifts
/// e = (2,-1,-1), (-1,2,-1), (-1,-1,2) of the hexagonal lattice.
template <class F>
bool is_h_periodic_probe(F&& f, const HPoint& t, double tol = 1e-9) {
    const HPoint shifts[3] = {HPoint(2.0, -1.0, -1.0), HPoint(-1.0, 2.0, -1.0),
                              HPoint(-1.0, -1.0, 2.0)};
    const cplx base = f(t);
    for (const HPoint& e : shifts) {
        if (std::abs(f(t + e) - base) > tol) return false;
    }
    return true;
}

/// A 2x2 real matrix in row-major order.
struct Mat22 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    double det() const { return a11 * a22 - a12 * a21; }
    Mat22 transpose() const { return {a11, a21, a12, a22}; }
    Mat22 inverse() const;
    Vec2 mul(const Vec2& v) const { return {a11 * v.x1 + a12 * v.x2, a21 * v.x1 + a22 * v.x2}; }
    Mat22 mul(const Mat22& m) const;
};

/// Integer lattice index of a general sampling plan.
struct IVec2 {
    long long k1 = 0;
    long long k2 = 0;

    friend bool operator==(const IVec2&, const IVec2&) = default;
};

/// A bounded plane region that tiles the plane under translations by a
/// lattice. Membership must be half-open so that each boundary point is
/// counted exactly once; contains() receives Cartesian coordinates.
struct SpectralSet {
    std::function<bool(double, double)> contains;
    /// Enclosing box: the set lies inside [-bound_x, bound_x] x [-bound_y, bound_y].
    double bound_x = 0.0;
    double bound_y = 0.0;
};

/// The box [-w1/2, w1/2) x [-w2/2, w2/2).
///
/// Comparisons are made against boundaries shifted down by 1e-9 so that a
/// coordinate landing within rounding noise of a boundary is classified the
/// same way as its exact value: lower-boundary points are kept, upper-boundary
/// points are dropped. Lattice scans only probe points that are either exactly
/// on a boundary or at least one lattice spacing away, so the shift cannot
/// misclassify an interior point.
SpectralSet box_spectral(double w1, double w2);

/// The hexagon -1 <= t1, t2, -t3 < 1 in homogeneous coordinates, scaled by s.
/// Uses the same boundary shift as box_spectral.
SpectralSet hexagon_spectral(double s = 1.0);

/// A sampling plan for a pair of lattices generated by matrices a and b whose
/// spectral sets omega_a, omega_b tile the plane: N = b^T a must be an integer
/// matrix, sample_indices lists { k : b^{-T} k in omega_a } and
/// frequency_indices lists { k : a^{-T} k in omega_b }. Both lists have
/// exactly |det N| entries, in lexicographic (k1, k2) order.
struct DftPlan {
    Mat22 a;
    Mat22 b;
    Mat22 n;
    long long det_n = 0;
    std::vector<IVec2> sample_indices;
    std::vector<IVec2> frequency_indices;
};

/// Builds a plan. Throws std::invalid_argument when b^T a is not an integer
/// matrix (tolerance 1e-9 per entry) and std::runtime_error when either index
/// enumeration does not contain exactly |det N| points.
DftPlan build_dft_plan(const Mat22& a, const Mat22& b, const SpectralSet& omega_a,
                       const SpectralSet& omega_b);

/// The sample node b^{-T} j.
Vec2 plan_sample_point(const DftPlan& plan, const IVec2& j);

/// | (1/|det N|) sum_{j in sample_indices} exp(2 pi i k^T N^{-1} j) - d |
/// where d is 1 when N^{-T} k is integral and 0 otherwise. The phases are
/// reduced in exact integer arithmetic, so the defect measures only the
/// rounding of the final summation.
double plan_orthogonality_defect(const DftPlan& plan, const IVec2& k);

/// Evaluates the plan interpolant at x from samples listed in
/// sample_indices order:
///   sum_j samples[j] Psi(x - b^{-T} j),
///   Psi(x) = (1/|det N|) sum_{k in frequency_indices} exp(2 pi i k^T a^{-1} x).
/// The interpolant matches the samples at every node and reproduces each
/// exponential exp(2 pi i k^T a^{-1} x) with k in frequency_indices.
cplx plan_interpolate(const DftPlan& plan, const std::vector<cplx>& samples, const Vec2& x);

}  // namespace hexfour
