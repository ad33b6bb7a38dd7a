#include "hexfour/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace hexfour {

namespace {

const double kRoot3 = std::numbers::sqrt3;
const double kRoot6 = std::sqrt(6.0);

// Normalizing factor of the first-kind entry (row, k).
double first_kind_scale(int row, int k) {
    if (row == 0) return 1.0;
    return (k == 0 || k == row) ? kRoot3 : kRoot6;
}

cplx row_dot_conj(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * std::conj(b[i]);
    return sum;
}

}  // namespace

cplx z_of(const HPoint& t) { return tc(FreqIndex(0, 1, -1), t); }

double deltoid_boundary(double x, double y) {
    const double r2 = x * x + y * y;
    return -3.0 * (r2 + 1.0) * (r2 + 1.0) + 8.0 * (x * x * x - 3.0 * x * y * y) + 4.0;
}

double deltoid_jacobian(const HPoint& t) {
    const double pi = std::numbers::pi;
    const double product =
        std::sin(pi * t.t1) * std::sin(pi * t.t2) * std::sin(pi * (t.t1 + t.t2));
    return 16.0 / 27.0 * pi * pi * std::abs(product);
}

double weight_w(double alpha, double x, double y) {
    const double b = deltoid_boundary(x, y);
    if (b < 0.0) throw std::domain_error("weight_w: point outside the deltoid region");
    if (b == 0.0 && alpha < 0.0)
        throw std::domain_error("weight_w: weight diverges on the boundary");
    const double pi = std::numbers::pi;
    return std::pow(4.0 / 27.0, alpha) * std::pow(pi, 4.0 * alpha) * std::pow(b, alpha);
}

std::vector<std::vector<cplx>> cheb_rows(ChebKind kind, ChebScaling scaling, int m, cplx z,
                                         cplx w) {
    if (m < 0) throw std::invalid_argument("cheb_rows: m must be >= 0");
    const bool first = kind == ChebKind::first;
    std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(m) + 1);
    rows[0] = {cplx(1.0)};
    if (m >= 1)
        rows[1] = first ? std::vector<cplx>{z, w} : std::vector<cplx>{3.0 * z, 3.0 * w};
    for (int r = 1; r < m; ++r) {
        const std::vector<cplx>& cur = rows[r];
        const std::vector<cplx>& prev = rows[r - 1];
        std::vector<cplx> next(static_cast<std::size_t>(r) + 2);
        for (int k = 0; k < r; ++k) {
            const cplx lower = k >= 1 ? prev[k - 1] : (first ? cur[1] : cplx(0.0));
            next[k] = 3.0 * z * cur[k] - cur[k + 1] - lower;
        }
        if (first) {
            next[r] = (3.0 * z * cur[r] - prev[r - 1]) / 2.0;
            next[r + 1] = 3.0 * w * cur[r] - 2.0 * cur[r - 1];
        } else {
            next[r] = 3.0 * z * cur[r] - prev[r - 1];
            next[r + 1] = 3.0 * w * cur[r] - cur[r - 1];
        }
        rows[r + 1] = std::move(next);
    }
    if (scaling == ChebScaling::orthonormal) {
        for (int r = 0; r <= m; ++r)
            for (int k = 0; k <= r; ++k)
                rows[r][k] *= first ? first_kind_scale(r, k) : kRoot6;
    }
    return rows;
}

cplx cheb_u_via_trig(int k, int m, const HPoint& t) {
    if (m < 0 || k < 0 || k > m)
        throw std::invalid_argument("cheb_u_via_trig: need 0 <= k <= m");
    const cplx denom = ts(FreqIndex(1, 1, -2), t);
    if (std::abs(denom) < 1e-10)
        throw std::domain_error("cheb_u_via_trig: evaluation point too close to a boundary");
    const cplx num = ts(FreqIndex(k + 1, m - k + 1, -(m + 2)), t);
    return num / denom;
}

RecurrenceMatrices recurrence_matrices(int m) {
    if (m < 0) throw std::invalid_argument("recurrence_matrices: m must be >= 0");
    RecurrenceMatrices r;
    r.m = m;
    r.a = Mat(m + 1, m + 2);
    r.b = Mat(m + 1, m + 1);
    r.c = Mat(m + 1, m);
    for (int k = 0; k <= m; ++k) {
        const double raw = k < m ? 1.0 / 3.0 : (m == 0 ? 1.0 : 2.0 / 3.0);
        r.a(k, k) = raw * first_kind_scale(m, k) / first_kind_scale(m + 1, k);
    }
    for (int k = 0; k + 1 <= m; ++k) {
        const double raw = k == 0 ? 2.0 / 3.0 : 1.0 / 3.0;
        r.b(k, k + 1) = raw * first_kind_scale(m, k) / first_kind_scale(m, k + 1);
    }
    for (int k = 1; k <= m; ++k)
        r.c(k, k - 1) = 1.0 / 3.0 * first_kind_scale(m, k) / first_kind_scale(m - 1, k - 1);
    return r;
}

double three_term_residual(int max_m, cplx z, cplx w) {
    if (max_m < 1) throw std::invalid_argument("three_term_residual: max_m must be >= 1");
    const auto rows = cheb_rows(ChebKind::first, ChebScaling::orthonormal, max_m, z, w);
    std::vector<RecurrenceMatrices> rec;
    rec.reserve(static_cast<std::size_t>(max_m) + 1);
    for (int m = 0; m <= max_m; ++m) rec.push_back(recurrence_matrices(m));

    double best = 0.0;
    for (int m = 0; m < max_m; ++m) {
        std::vector<cplx> rhs_z = rec[m].a.apply(rows[m + 1]);
        {
            const std::vector<cplx> bm = rec[m].b.apply(rows[m]);
            for (int k = 0; k <= m; ++k) rhs_z[k] += bm[k];
        }
        if (m >= 1) {
            const std::vector<cplx> cm = rec[m].c.apply(rows[m - 1]);
            for (int k = 0; k <= m; ++k) rhs_z[k] += cm[k];
        }
        for (int k = 0; k <= m; ++k)
            best = std::max(best, std::abs(z * rows[m][k] - rhs_z[k]));

        std::vector<cplx> rhs_w = rec[m + 1].c.transpose().apply(rows[m + 1]);
        {
            const std::vector<cplx> bt = rec[m].b.transpose().apply(rows[m]);
            for (int k = 0; k <= m; ++k) rhs_w[k] += bt[k];
        }
        if (m >= 1) {
            const std::vector<cplx> at = rec[m - 1].a.transpose().apply(rows[m - 1]);
            for (int k = 0; k <= m; ++k) rhs_w[k] += at[k];
        }
        for (int k = 0; k <= m; ++k)
            best = std::max(best, std::abs(w * rows[m][k] - rhs_w[k]));
    }
    return best;
}

cplx repro_kernel(int n, cplx z, cplx w) {
    if (n < 0) throw std::invalid_argument("repro_kernel: n must be >= 0");
    const auto rz = cheb_rows(ChebKind::first, ChebScaling::orthonormal, n, z, std::conj(z));
    const auto rw = cheb_rows(ChebKind::first, ChebScaling::orthonormal, n, w, std::conj(w));
    cplx sum = 0.0;
    for (int m = 0; m <= n; ++m) sum += row_dot_conj(rz[m], rw[m]);
    return sum;
}

double christoffel_darboux_residual(int n, cplx z, cplx w) {
    if (n < 0) throw std::invalid_argument("christoffel_darboux_residual: n must be >= 0");
    const auto rz =
        cheb_rows(ChebKind::first, ChebScaling::orthonormal, n + 1, z, std::conj(z));
    const auto rw =
        cheb_rows(ChebKind::first, ChebScaling::orthonormal, n + 1, w, std::conj(w));
    cplx kn = 0.0;
    for (int m = 0; m <= n; ++m) kn += row_dot_conj(rz[m], rw[m]);

    const Mat at = recurrence_matrices(n).a.transpose();
    const Mat ct = recurrence_matrices(n + 1).c.transpose();

    std::vector<cplx> conj_rw_n(rw[n].size());
    for (std::size_t i = 0; i < rw[n].size(); ++i) conj_rw_n[i] = std::conj(rw[n][i]);
    std::vector<cplx> conj_rw_n1(rw[n + 1].size());
    for (std::size_t i = 0; i < rw[n + 1].size(); ++i) conj_rw_n1[i] = std::conj(rw[n + 1][i]);

    const std::vector<cplx> left = at.apply(conj_rw_n);
    cplx rhs = 0.0;
    for (std::size_t i = 0; i < left.size(); ++i) rhs += rz[n + 1][i] * left[i];
    const std::vector<cplx> right = ct.apply(conj_rw_n1);
    for (std::size_t i = 0; i < right.size(); ++i) rhs -= rz[n][i] * right[i];

    return std::abs((z - w) * kn - rhs);
}

IdealBasis ideal_basis(int n) {
    if (n < 1) throw std::invalid_argument("ideal_basis: n must be >= 1");
    IdealBasis b;
    b.n = n;
    b.gamma0 = Mat(n + 2, n + 1);
    b.gamma1 = Mat(n + 2, n);
    b.gamma0(0, 1) = first_kind_scale(n + 1, 0) / first_kind_scale(n, 1);
    b.gamma0(n + 1, n - 1) = first_kind_scale(n + 1, n + 1) / first_kind_scale(n, n - 1);
    for (int k = 1; k <= n; ++k)
        b.gamma1(k, k - 1) = first_kind_scale(n + 1, k) / first_kind_scale(n - 1, k - 1);
    return b;
}

std::vector<cplx> ideal_eval(const IdealBasis& basis, cplx z, cplx w) {
    const int n = basis.n;
    const auto rows = cheb_rows(ChebKind::first, ChebScaling::orthonormal, n + 1, z, w);
    std::vector<cplx> q = rows[n + 1];
    const std::vector<cplx> g0 = basis.gamma0.apply(rows[n]);
    const std::vector<cplx> g1 = basis.gamma1.apply(rows[n - 1]);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= g0[i] + g1[i];
    return q;
}

double ideal_residual(const IdealBasis& basis, const HPoint& t) {
    const cplx z = z_of(t);
    const std::vector<cplx> q = ideal_eval(basis, z, std::conj(z));
    double best = 0.0;
    for (const cplx& v : q) best = std::max(best, std::abs(v));
    return best;
}

std::vector<std::vector<double>> real_basis(int max_degree, const DeltoidPoint& p) {
    if (max_degree < 0) throw std::invalid_argument("real_basis: max_degree must be >= 0");
    const cplx z(p.x, p.y);
    const auto rows =
        cheb_rows(ChebKind::first, ChebScaling::orthonormal, max_degree, z, std::conj(z));
    std::vector<std::vector<double>> out(static_cast<std::size_t>(max_degree) + 1);
    const double root2 = std::numbers::sqrt2;
    for (int d = 0; d <= max_degree; ++d) {
        if (d == 0) {
            out[0] = {1.0};
            continue;
        }
        std::vector<double>& row = out[d];
        for (int k = 0; 2 * k < d; ++k) {
            row.push_back(root2 * rows[d][k].real());
            row.push_back(root2 * rows[d][k].imag());
        }
        if (d % 2 == 0) row.push_back(rows[d][d / 2].real());
    }
    return out;
}

DeltoidCubature gauss_cubature_deltoid(int n) {
    if (n < 1) throw std::invalid_argument("gauss_cubature_deltoid: n must be >= 1");
    DeltoidCubature rule;
    rule.n = n;
    rule.degree = 2 * n - 1;
    const int big = n + 2;
    rule.indices = enumerate_indices(IndexSet::tri_interior, big);
    const double pi = std::numbers::pi;
    for (const FreqIndex& j : rule.indices) {
        const HPoint t = node_point(j, big);
        rule.preimages.push_back(t);
        const cplx z = z_of(t);
        rule.nodes.push_back({z.real(), z.imag()});
        const double s1 = std::sin(pi * j.k1 / big);
        const double s2 = std::sin(pi * j.k2 / big);
        const double s12 = std::sin(pi * (j.k1 + j.k2) / big);
        rule.weights.push_back(32.0 / (9.0 * big * big) * s1 * s1 * s2 * s2 * s12 * s12);
    }
    const double total = pairwise_accumulate<double>(
        rule.weights.size(), [&](std::size_t i) { return rule.weights[i]; });
    rule.kappa = 1.0 / total;
    return rule;
}

DeltoidCubature lobatto_cubature_deltoid(int n) {
    if (n < 1) throw std::invalid_argument("lobatto_cubature_deltoid: n must be >= 1");
    DeltoidCubature rule;
    rule.n = n;
    rule.degree = 2 * n - 1;
    rule.indices = enumerate_indices(IndexSet::tri_full, n);
    const double scale = 1.0 / (3.0 * n * n);
    for (const FreqIndex& j : rule.indices) {
        const HPoint t = node_point(j, n);
        rule.preimages.push_back(t);
        const cplx z = z_of(t);
        rule.nodes.push_back({z.real(), z.imag()});
        rule.weights.push_back(scale * classify(j, n, Domain::triangle).weight_lambda);
    }
    const double total = pairwise_accumulate<double>(
        rule.weights.size(), [&](std::size_t i) { return rule.weights[i]; });
    rule.kappa = 1.0 / total;
    return rule;
}

cplx interp_poly(const DeltoidSamples& samples, cplx z) {
    if (samples.n < 1) throw std::invalid_argument("interp_poly: n must be >= 1");
    if (samples.nodes == PolyNodeSet::gauss) {
        const DeltoidCubature rule = gauss_cubature_deltoid(samples.n);
        if (samples.values.size() != rule.nodes.size())
            throw std::invalid_argument("interp_poly: sample count mismatch");
        const int deg = samples.n - 1;
        const auto rz =
            cheb_rows(ChebKind::second, ChebScaling::orthonormal, deg, z, std::conj(z));
        return pairwise_accumulate<cplx>(rule.nodes.size(), [&](std::size_t i) {
            const cplx zi(rule.nodes[i].x, rule.nodes[i].y);
            const auto ri =
                cheb_rows(ChebKind::second, ChebScaling::orthonormal, deg, zi, std::conj(zi));
            cplx kernel = 0.0;
            for (int m = 0; m <= deg; ++m) kernel += row_dot_conj(rz[m], ri[m]);
            return samples.values[i] * rule.weights[i] * kernel;
        });
    }
    const DeltoidCubature rule = lobatto_cubature_deltoid(samples.n);
    if (samples.values.size() != rule.nodes.size())
        throw std::invalid_argument("interp_poly: sample count mismatch");
    return pairwise_accumulate<cplx>(rule.nodes.size(), [&](std::size_t i) {
        const cplx zi(rule.nodes[i].x, rule.nodes[i].y);
        return samples.values[i] * kernel_phi(samples.n, z, zi) /
               kernel_phi(samples.n, zi, zi);
    });
}

cplx kernel_phi(int n, cplx z, cplx w) {
    if (n < 1) throw std::invalid_argument("kernel_phi: n must be >= 1");
    const auto rz = cheb_rows(ChebKind::first, ChebScaling::orthonormal, n, z, std::conj(z));
    const auto rw = cheb_rows(ChebKind::first, ChebScaling::orthonormal, n, w, std::conj(w));
    cplx kn = 0.0;
    cplx kn1 = 0.0;
    for (int m = 0; m <= n; ++m) {
        const cplx term = row_dot_conj(rz[m], rw[m]);
        kn += term;
        if (m <= n - 1) kn1 += term;
    }
    const cplx tz = rz[n][0] / kRoot3;
    const cplx tw = rw[n][0] / kRoot3;
    return 0.5 * (kn + kn1) - 0.5 * (tz * std::conj(tw) + std::conj(tz) * tw);
}

double kernel_phi_offdiag_residual(int n) {
    const DeltoidCubature rule = lobatto_cubature_deltoid(n);
    double best = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const cplx zj(rule.nodes[j].x, rule.nodes[j].y);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            if (j == k) continue;
            const cplx zk(rule.nodes[k].x, rule.nodes[k].y);
            best = std::max(best, std::abs(kernel_phi(n, zj, zk)));
        }
    }
    return best;
}

}  // namespace hexfour
