#include "hexfour/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hexfour {

namespace {

constexpr double kPlaneTol = 1e-12;
constexpr double kIntegerTol = 1e-9;

// Right action on points as a signed coordinate permutation:
// act(g, t)_i = sign * t_perm[i].
struct PermRep {
    int sign;
    std::array<int, 3> perm;
};

constexpr std::array<PermRep, 6> kPermReps = {{
    {+1, {0, 1, 2}},  // identity
    {-1, {0, 2, 1}},  // s1: -(t1, t3, t2)
    {-1, {1, 0, 2}},  // s2: -(t2, t1, t3)
    {-1, {2, 1, 0}},  // s3: -(t3, t2, t1)
    {+1, {2, 0, 1}},  // r12: (t3, t1, t2)
    {+1, {1, 2, 0}},  // r21: (t2, t3, t1)
}};

const PermRep& rep_of(GroupElement g) { return kPermReps[static_cast<int>(g)]; }

}  // namespace

HPoint::HPoint(double t1_, double t2_, double t3_) : t1(t1_), t2(t2_), t3(t3_) {
    if (std::abs(t1 + t2 + t3) > kPlaneTol)
        throw std::invalid_argument("HPoint: coordinates must sum to zero");
}

HPoint operator+(const HPoint& a, const HPoint& b) {
    HPoint r;
    r.t1 = a.t1 + b.t1;
    r.t2 = a.t2 + b.t2;
    r.t3 = a.t3 + b.t3;
    return r;
}

HPoint operator-(const HPoint& a, const HPoint& b) {
    HPoint r;
    r.t1 = a.t1 - b.t1;
    r.t2 = a.t2 - b.t2;
    r.t3 = a.t3 - b.t3;
    return r;
}

HPoint operator*(double s, const HPoint& a) {
    HPoint r;
    r.t1 = s * a.t1;
    r.t2 = s * a.t2;
    r.t3 = s * a.t3;
    return r;
}

HPoint to_homogeneous(const Vec2& x) {
    const double root3 = std::numbers::sqrt3;
    HPoint r;
    r.t1 = (root3 * x.x1 - x.x2) / 2.0;
    r.t2 = x.x2;
    r.t3 = -(root3 * x.x1 + x.x2) / 2.0;
    return r;
}

Vec2 from_homogeneous(const HPoint& t) {
    return {(t.t1 - t.t3) / std::numbers::sqrt3, t.t2};
}

FreqIndex::FreqIndex(int k1_, int k2_, int k3_) : k1(k1_), k2(k2_), k3(k3_) {
    if (k1 + k2 + k3 != 0)
        throw std::invalid_argument("FreqIndex: components must sum to zero");
}

FreqIndex operator+(const FreqIndex& a, const FreqIndex& b) {
    return FreqIndex(a.k1 + b.k1, a.k2 + b.k2);
}

FreqIndex operator-(const FreqIndex& a, const FreqIndex& b) {
    return FreqIndex(a.k1 - b.k1, a.k2 - b.k2);
}

double dot(const FreqIndex& k, const HPoint& t) {
    return k.k1 * t.t1 + k.k2 * t.t2 + k.k3 * t.t3;
}

HPoint node_point(const FreqIndex& j, int n) {
    if (n <= 0) throw std::invalid_argument("node_point: n must be positive");
    HPoint r;
    r.t1 = static_cast<double>(j.k1) / n;
    r.t2 = static_cast<double>(j.k2) / n;
    r.t3 = static_cast<double>(j.k3) / n;
    return r;
}

bool congruent_mod3n(const FreqIndex& a, const FreqIndex& b, int n) {
    if (n <= 0) throw std::invalid_argument("congruent_mod3n: n must be positive");
    const int m = 3 * n;
    auto residue = [m](int v) { return ((v % m) + m) % m; };
    const int r1 = residue(a.k1 - b.k1);
    const int r2 = residue(a.k2 - b.k2);
    const int r3 = residue(a.k3 - b.k3);
    return r1 == r2 && r2 == r3;
}

int group_sign(GroupElement g) {
    switch (g) {
        case GroupElement::s1:
        case GroupElement::s2:
        case GroupElement::s3:
            return -1;
        default:
            return 1;
    }
}

GroupElement compose(GroupElement a, GroupElement b) {
    const PermRep& ra = rep_of(a);
    const PermRep& rb = rep_of(b);
    PermRep c;
    c.sign = ra.sign * rb.sign;
    for (int i = 0; i < 3; ++i) c.perm[i] = ra.perm[rb.perm[i]];
    for (std::size_t g = 0; g < kPermReps.size(); ++g) {
        if (kPermReps[g].sign == c.sign && kPermReps[g].perm == c.perm)
            return static_cast<GroupElement>(g);
    }
    throw std::logic_error("compose: composition left the group");
}

GroupElement inverse(GroupElement g) {
    if (g == GroupElement::r12) return GroupElement::r21;
    if (g == GroupElement::r21) return GroupElement::r12;
    return g;
}

HPoint act(GroupElement g, const HPoint& t) {
    const PermRep& r = rep_of(g);
    const double c[3] = {t.t1, t.t2, t.t3};
    HPoint out;
    out.t1 = r.sign * c[r.perm[0]];
    out.t2 = r.sign * c[r.perm[1]];
    out.t3 = r.sign * c[r.perm[2]];
    return out;
}

FreqIndex act(GroupElement g, const FreqIndex& k) {
    const PermRep& r = rep_of(g);
    const int c[3] = {k.k1, k.k2, k.k3};
    return FreqIndex(r.sign * c[r.perm[0]], r.sign * c[r.perm[1]], r.sign * c[r.perm[2]]);
}

std::vector<FreqIndex> enumerate_indices(IndexSet kind, int n) {
    if (n <= 0) throw std::invalid_argument("enumerate_indices: n must be positive");
    std::vector<FreqIndex> out;
    switch (kind) {
        case IndexSet::hex_fundamental:
            out.reserve(static_cast<std::size_t>(3) * n * n);
            for (int k1 = -n; k1 < n; ++k1)
                for (int k2 = -n; k2 < n; ++k2)
                    if (-n <= k1 + k2 && k1 + k2 < n) out.emplace_back(k1, k2);
            break;
        case IndexSet::hex_symmetric:
            for (int k1 = -n; k1 <= n; ++k1)
                for (int k2 = -n; k2 <= n; ++k2)
                    if (std::abs(k1 + k2) <= n) out.emplace_back(k1, k2);
            break;
        case IndexSet::hex_interior:
            for (int k1 = -n + 1; k1 < n; ++k1)
                for (int k2 = -n + 1; k2 < n; ++k2)
                    if (std::abs(k1 + k2) < n) out.emplace_back(k1, k2);
            break;
        case IndexSet::tri_full:
            for (int k1 = 0; k1 <= n; ++k1)
                for (int k2 = 0; k1 + k2 <= n; ++k2) out.emplace_back(k1, k2);
            break;
        case IndexSet::tri_interior:
            for (int k1 = 1; k1 <= n - 1; ++k1)
                for (int k2 = 1; k1 + k2 <= n - 1; ++k2) out.emplace_back(k1, k2);
            break;
    }
    return out;
}

PointClass classify(const FreqIndex& j, int n, Domain domain) {
    if (n <= 0) throw std::invalid_argument("classify: n must be positive");
    if (domain == Domain::hexagon) {
        if (std::abs(j.k1) > n || std::abs(j.k2) > n || std::abs(j.k3) > n)
            throw std::invalid_argument("classify: index outside the symmetric hexagon family");
        const bool boundary =
            std::abs(j.k1) == n || std::abs(j.k2) == n || std::abs(j.k3) == n;
        if (!boundary) return {NodeClass::interior, 1.0, 6.0};
        const bool vertex = j.k1 == 0 || j.k2 == 0 || j.k3 == 0;
        if (vertex) return {NodeClass::vertex, 1.0 / 3.0, 1.0};
        return {NodeClass::edge, 1.0 / 2.0, 3.0};
    }
    if (j.k1 < 0 || j.k2 < 0 || j.k3 > 0 || -j.k3 > n)
        throw std::invalid_argument("classify: index outside the full triangle family");
    // The node j / n lies in the triangle with vertices 0, (1,0,-1), (0,1,-1).
    // It sits on an edge when one of k1 = 0, k2 = 0, -k3 = n holds and on a
    // vertex when two hold simultaneously.
    if (j.k1 == 0 && j.k2 == 0) return {NodeClass::vertex, 1.0 / 3.0, 1.0};
    if ((j.k1 == 0 || j.k2 == 0) && -j.k3 == n) return {NodeClass::vertex, 1.0 / 3.0, 1.0};
    if (j.k1 == 0 || j.k2 == 0 || -j.k3 == n) return {NodeClass::edge, 1.0 / 2.0, 3.0};
    return {NodeClass::interior, 1.0, 6.0};
}

Mat22 Mat22::inverse() const {
    const double d = det();
    if (d == 0.0) throw std::invalid_argument("Mat22::inverse: singular matrix");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

Mat22 Mat22::mul(const Mat22& m) const {
    return {a11 * m.a11 + a12 * m.a21, a11 * m.a12 + a12 * m.a22,
            a21 * m.a11 + a22 * m.a21, a21 * m.a12 + a22 * m.a22};
}

namespace {

constexpr double kBoundarySnap = 1e-9;

bool half_open(double v, double lo, double hi) {
    return v >= lo - kBoundarySnap && v < hi - kBoundarySnap;
}

// All integer points k with m^{-T} k inside the enclosing box of omega and
// omega.contains(m^{-T} k), in lexicographic order.
std::vector<IVec2> scan_lattice(const Mat22& m, const SpectralSet& omega) {
    const Mat22 mt = m.transpose();
    const Mat22 m_inv_t = mt.inverse();
    // k = m^T u ranges over the image of the enclosing box; bound each
    // component by the row-wise absolute sums.
    const double b1 = std::abs(mt.a11) * omega.bound_x + std::abs(mt.a12) * omega.bound_y;
    const double b2 = std::abs(mt.a21) * omega.bound_x + std::abs(mt.a22) * omega.bound_y;
    const long long k1_max = static_cast<long long>(std::floor(b1)) + 1;
    const long long k2_max = static_cast<long long>(std::floor(b2)) + 1;
    std::vector<IVec2> out;
    for (long long k1 = -k1_max; k1 <= k1_max; ++k1) {
        for (long long k2 = -k2_max; k2 <= k2_max; ++k2) {
            const Vec2 u = m_inv_t.mul(Vec2{static_cast<double>(k1), static_cast<double>(k2)});
            if (omega.contains(u.x1, u.x2)) out.push_back({k1, k2});
        }
    }
    return out;
}

}  // namespace

SpectralSet box_spectral(double w1, double w2) {
    if (w1 <= 0.0 || w2 <= 0.0)
        throw std::invalid_argument("box_spectral: widths must be positive");
    SpectralSet s;
    s.contains = [w1, w2](double x1, double x2) {
        return half_open(x1, -w1 / 2.0, w1 / 2.0) && half_open(x2, -w2 / 2.0, w2 / 2.0);
    };
    s.bound_x = w1 / 2.0 + 1.0;
    s.bound_y = w2 / 2.0 + 1.0;
    return s;
}

SpectralSet hexagon_spectral(double s) {
    if (s <= 0.0) throw std::invalid_argument("hexagon_spectral: scale must be positive");
    SpectralSet set;
    set.contains = [s](double x1, double x2) {
        const HPoint t = to_homogeneous({x1 / s, x2 / s});
        return half_open(t.t1, -1.0, 1.0) && half_open(t.t2, -1.0, 1.0) &&
               half_open(-t.t3, -1.0, 1.0);
    };
    set.bound_x = s * 2.0 / std::numbers::sqrt3 + 1.0;
    set.bound_y = s * 1.0 + 1.0;
    return set;
}

DftPlan build_dft_plan(const Mat22& a, const Mat22& b, const SpectralSet& omega_a,
                       const SpectralSet& omega_b) {
    DftPlan plan;
    plan.a = a;
    plan.b = b;
    const Mat22 n_raw = b.transpose().mul(a);
    const double entries[4] = {n_raw.a11, n_raw.a12, n_raw.a21, n_raw.a22};
    double rounded[4];
    for (int i = 0; i < 4; ++i) {
        rounded[i] = std::round(entries[i]);
        if (std::abs(entries[i] - rounded[i]) > kIntegerTol)
            throw std::invalid_argument("build_dft_plan: b^T a is not an integer matrix");
    }
    plan.n = {rounded[0], rounded[1], rounded[2], rounded[3]};
    plan.det_n = std::llabs(static_cast<long long>(std::llround(plan.n.det())));
    if (plan.det_n == 0) throw std::invalid_argument("build_dft_plan: det(b^T a) is zero");

    plan.sample_indices = scan_lattice(b, omega_a);
    plan.frequency_indices = scan_lattice(a, omega_b);
    if (static_cast<long long>(plan.sample_indices.size()) != plan.det_n)
        throw std::runtime_error(
            "build_dft_plan: sample enumeration has " +
            std::to_string(plan.sample_indices.size()) + " points, expected " +
            std::to_string(plan.det_n) + "; omega_a does not tile for this lattice pair");
    if (static_cast<long long>(plan.frequency_indices.size()) != plan.det_n)
        throw std::runtime_error(
            "build_dft_plan: frequency enumeration has " +
            std::to_string(plan.frequency_indices.size()) + " points, expected " +
            std::to_string(plan.det_n) + "; omega_b does not tile for this lattice pair");
    return plan;
}

Vec2 plan_sample_point(const DftPlan& plan, const IVec2& j) {
    const Mat22 b_inv_t = plan.b.transpose().inverse();
    return b_inv_t.mul(Vec2{static_cast<double>(j.k1), static_cast<double>(j.k2)});
}

double plan_orthogonality_defect(const DftPlan& plan, const IVec2& k) {
    // N^{-1} = adj(N) / det(N) and all of k, adj(N), j are integers, so the
    // phase k^T N^{-1} j reduces exactly modulo det(N).
    const long long n11 = std::llround(plan.n.a11);
    const long long n12 = std::llround(plan.n.a12);
    const long long n21 = std::llround(plan.n.a21);
    const long long n22 = std::llround(plan.n.a22);
    const long long det = n11 * n22 - n12 * n21;
    const long long adj11 = n22, adj12 = -n12, adj21 = -n21, adj22 = n11;

    // k^T N^{-1} j = (adj(N)^T k) . j / det.
    const long long c1 = adj11 * k.k1 + adj21 * k.k2;
    const long long c2 = adj12 * k.k1 + adj22 * k.k2;

    const double expected = (c1 % det == 0 && c2 % det == 0) ? 1.0 : 0.0;

    const double two_pi = 2.0 * std::numbers::pi;
    const long long abs_det = std::llabs(det);
    const cplx sum = pairwise_accumulate<cplx>(
        plan.sample_indices.size(), [&](std::size_t i) {
            const IVec2& j = plan.sample_indices[i];
            long long m = (c1 * j.k1 + c2 * j.k2) % det;
            const double angle = two_pi * static_cast<double>(m) / static_cast<double>(det);
            return std::polar(1.0, angle);
        });
    return std::abs(sum / static_cast<double>(abs_det) - expected);
}

cplx plan_interpolate(const DftPlan& plan, const std::vector<cplx>& samples, const Vec2& x) {
    if (samples.size() != plan.sample_indices.size())
        throw std::invalid_argument("plan_interpolate: sample count does not match the plan");
    const Mat22 a_inv = plan.a.inverse();
    const Mat22 b_inv_t = plan.b.transpose().inverse();
    const double two_pi = 2.0 * std::numbers::pi;
    const double inv_det = 1.0 / static_cast<double>(plan.det_n);

    auto psi = [&](const Vec2& y) {
        const Vec2 u = a_inv.mul(y);
        return inv_det * pairwise_accumulate<cplx>(
                             plan.frequency_indices.size(), [&](std::size_t i) {
                                 const IVec2& k = plan.frequency_indices[i];
                                 const double angle =
                                     two_pi * (static_cast<double>(k.k1) * u.x1 +
                                               static_cast<double>(k.k2) * u.x2);
                                 return std::polar(1.0, angle);
                             });
    };

    return pairwise_accumulate<cplx>(plan.sample_indices.size(), [&](std::size_t i) {
        const IVec2& j = plan.sample_indices[i];
        const Vec2 node = b_inv_t.mul(Vec2{static_cast<double>(j.k1), static_cast<double>(j.k2)});
        return samples[i] * psi({x.x1 - node.x1, x.x2 - node.x2});
    });
}

}  // namespace hexfour
