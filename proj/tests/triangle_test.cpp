#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hexfour/lattice.hpp"
#include "hexfour/quadrature.hpp"
#include "hexfour/triangle.hpp"

using namespace hexfour;

namespace {

HPoint random_triangle_point(std::mt19937& gen) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const double u = dist(gen);
    const double v = dist(gen);
    return HPoint(u * (1.0 - v), u * v);
}

FreqIndex random_cone_index(std::mt19937& gen, int degree) {
    std::uniform_int_distribution<int> d(0, degree);
    for (;;) {
        const int k1 = d(gen);
        const int k2 = d(gen);
        if (k1 + k2 <= degree) return FreqIndex(k1, k2);
    }
}

// Continuous inner product value for a pair of tc functions with cone indices.
double tc_gram_expected(const FreqIndex& k, const FreqIndex& j) {
    if (!(k == j)) return 0.0;
    if (k.k1 == 0 && k.k2 == 0 && k.k3 == 0) return 1.0;
    if (k.k1 == 0 || k.k2 == 0 || k.k3 == 0) return 1.0 / 3.0;
    return 1.0 / 6.0;
}

// Value of the full-grid discrete inner product of tc functions at grid size
// n, including the aliased diagonal at top degree.
double tc_gram_discrete(const FreqIndex& k, const FreqIndex& j, int n) {
    if (!(k == j)) return 0.0;
    if (k.k1 == 0 && k.k2 == 0 && k.k3 == 0) return 1.0;
    if (-k.k3 < n) return (k.k1 == 0 || k.k2 == 0 || k.k3 == 0) ? 1.0 / 3.0 : 1.0 / 6.0;
    return (k.k1 == 0 || k.k2 == 0) ? 1.0 : 1.0 / 3.0;
}

}  // namespace

TEST_SUITE("triangle") {

TEST_CASE("cone membership and orbit representatives") {
    CHECK(in_lambda(FreqIndex(2, 1, -3)));
    CHECK(in_lambda(FreqIndex(0, 0, 0)));
    CHECK_FALSE(in_lambda(FreqIndex(-1, 2, -1)));
    CHECK_FALSE(in_lambda(FreqIndex(2, -1, -1)));

    CHECK(canonical_orbit_rep(FreqIndex(0, 0)) == FreqIndex(0, 0));
    CHECK(canonical_orbit_rep(FreqIndex(-2, 2, 0)) == FreqIndex(2, 0, -2));

    std::mt19937 gen(5);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const FreqIndex k(d(gen), d(gen));
        const FreqIndex rep = canonical_orbit_rep(k);
        CHECK(in_lambda(rep));
        for (GroupElement g : group_elements)
            CHECK(canonical_orbit_rep(act(g, k)) == rep);
    }
}

TEST_CASE("symmetrized exponentials transform by parity in both arguments") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 15; ++trial) {
        const FreqIndex k = random_cone_index(gen, 5);
        const HPoint t = random_triangle_point(gen);
        for (GroupElement g : group_elements) {
            const double sg = group_sign(g);
            CHECK(std::abs(tc(k, act(g, t)) - tc(k, t)) < 1e-13);
            CHECK(std::abs(tc(act(g, k), t) - tc(k, t)) < 1e-13);
            CHECK(std::abs(ts(k, act(g, t)) - sg * ts(k, t)) < 1e-13);
            CHECK(std::abs(ts(act(g, k), t) - sg * ts(k, t)) < 1e-13);
        }
    }
}

TEST_CASE("odd symmetrization vanishes when an index component is zero") {
    std::mt19937 gen(13);
    for (const FreqIndex& k : {FreqIndex(3, 0, -3), FreqIndex(0, 2, -2), FreqIndex(0, 0, 0)}) {
        for (int trial = 0; trial < 10; ++trial)
            CHECK(std::abs(ts(k, random_triangle_point(gen))) < 1e-14);
    }
}

TEST_CASE("three-term closed forms match the group averages") {
    std::mt19937 gen(17);
    for (int trial = 0; trial < 60; ++trial) {
        const FreqIndex k = random_cone_index(gen, 6);
        const HPoint t = random_triangle_point(gen);
        CHECK(std::abs(tc(k, t) - tc_cos_form(k, t)) < 1e-13);
        CHECK(std::abs(ts(k, t) - ts_sin_form(k, t)) < 1e-13);
    }
}

TEST_CASE("the lowest odd function is a product of sines") {
    std::mt19937 gen(19);
    const FreqIndex k(1, 1, -2);
    for (int trial = 0; trial < 20; ++trial) {
        const HPoint t = random_triangle_point(gen);
        const cplx value = ts(k, t);
        const double product = 4.0 / 3.0 * std::sin(std::numbers::pi * t.t1) *
                               std::sin(std::numbers::pi * t.t2) *
                               std::sin(std::numbers::pi * t.t3);
        CHECK(std::abs(value.imag()) < 1e-14);
        CHECK(std::abs(value.real() - product) < 1e-13);
    }
    const HPoint centroid(1.0 / 3.0, 1.0 / 3.0);
    CHECK(ts(k, centroid).real() == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("continuous orthogonality of the even family") {
    const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_full, 3);
    for (const FreqIndex& k : family) {
        for (const FreqIndex& j : family) {
            const cplx value =
                integrate_triangle([&](const HPoint& t) { return tc(k, t) * std::conj(tc(j, t)); });
            CHECK(std::abs(value - tc_gram_expected(k, j)) < 1e-10);
        }
    }
}

TEST_CASE("continuous orthogonality of the odd family") {
    const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_interior, 5);
    REQUIRE(family.size() == 6);
    for (const FreqIndex& k : family) {
        for (const FreqIndex& j : family) {
            const cplx value =
                integrate_triangle([&](const HPoint& t) { return ts(k, t) * std::conj(ts(j, t)); });
            const double expected = (k == j) ? 1.0 / 6.0 : 0.0;
            CHECK(std::abs(value - expected) < 1e-10);
        }
    }
}

TEST_CASE("full discrete inner product matches the aliased table") {
    for (int n = 1; n <= 5; ++n) {
        const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_full, n);
        for (const FreqIndex& k : family) {
            for (const FreqIndex& j : family) {
                const cplx value = inner_triangle([&](const HPoint& t) { return tc(k, t); },
                                                  [&](const HPoint& t) { return tc(j, t); }, n,
                                                  TriInner::full);
                CHECK(std::abs(value - tc_gram_discrete(k, j, n)) < 1e-12);
            }
        }
    }
}

TEST_CASE("interior discrete inner product is exactly orthonormal up to scale") {
    for (int n : {3, 4, 5, 6}) {
        const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_interior, n);
        for (const FreqIndex& k : family) {
            for (const FreqIndex& j : family) {
                const cplx value = inner_triangle([&](const HPoint& t) { return ts(k, t); },
                                                  [&](const HPoint& t) { return ts(j, t); }, n,
                                                  TriInner::interior);
                const double expected = (k == j) ? 1.0 / 6.0 : 0.0;
                CHECK(std::abs(value - expected) < 1e-12);
            }
        }
    }
}

TEST_CASE("sine cardinal function agrees with its spectral expansion") {
    std::mt19937 gen(23);
    CHECK_THROWS_AS(sine_kernel(2, FreqIndex(1, 1), HPoint(0.3, 0.3)), std::invalid_argument);
    for (int n : {4, 5}) {
        const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_interior, n);
        for (const FreqIndex& j : family) {
            const HPoint node = node_point(j, n);
            for (int trial = 0; trial < 12; ++trial) {
                const HPoint t = random_triangle_point(gen);
                cplx spectral(0.0, 0.0);
                for (const FreqIndex& k : family) spectral += ts(k, t) * std::conj(ts(k, node));
                spectral *= 12.0 / (static_cast<double>(n) * n);
                CHECK(std::abs(spectral.imag()) < 1e-12);
                CHECK(std::abs(sine_kernel(n, j, t) - spectral.real()) < 1e-10);
            }
        }
    }
}

TEST_CASE("sine interpolation is cardinal and reproduces the odd span") {
    const int n = 5;
    const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_interior, n);
    for (const FreqIndex& j : family) {
        for (const FreqIndex& l : family) {
            const double expected = (j == l) ? 1.0 : 0.0;
            CHECK(std::abs(sine_kernel(n, j, node_point(l, n)) - expected) < 1e-10);
        }
    }

    std::mt19937 gen(29);
    for (const FreqIndex& k : family) {
        const TriSamples samples =
            sample_triangle([&](const HPoint& t) { return ts(k, t); }, n, TriNodeSet::interior);
        for (int trial = 0; trial < 6; ++trial) {
            const HPoint t = random_triangle_point(gen);
            CHECK(std::abs(interp_triangle_sine(samples, t) - ts(k, t)) < 1e-10);
        }
    }

    // Idempotence: interpolating the interpolant's samples changes nothing.
    auto f = [](const HPoint& t) { return cplx(std::exp(t.t1) * t.t2, 0.0); };
    const TriSamples samples = sample_triangle(f, n, TriNodeSet::interior);
    const TriSamples resampled = sample_triangle(
        [&](const HPoint& t) { return interp_triangle_sine(samples, t); }, n, TriNodeSet::interior);
    for (int trial = 0; trial < 6; ++trial) {
        const HPoint t = random_triangle_point(gen);
        CHECK(std::abs(interp_triangle_sine(samples, t) - interp_triangle_sine(resampled, t)) <
              1e-10);
    }
}

TEST_CASE("cosine cardinal function matches its definitional form") {
    std::mt19937 gen(31);
    const int n = 4;
    const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_full, n);
    for (const FreqIndex& j : family) {
        for (int trial = 0; trial < 8; ++trial) {
            const HPoint t = random_triangle_point(gen);
            CHECK(std::abs(cosine_kernel(n, j, t) - cosine_kernel_reference(n, j, t)) < 1e-10);
        }
    }
}

TEST_CASE("cosine interpolation is cardinal on the full grid") {
    for (int n : {3, 4}) {
        const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_full, n);
        for (const FreqIndex& j : family) {
            for (const FreqIndex& l : family) {
                const double expected = (j == l) ? 1.0 : 0.0;
                CHECK(std::abs(cosine_kernel(n, j, node_point(l, n)) - expected) < 1e-10);
            }
        }
    }
}

TEST_CASE("cosine interpolation reproduces the even span including constants") {
    const int n = 4;
    std::mt19937 gen(37);
    const std::vector<FreqIndex> family = enumerate_indices(IndexSet::tri_full, n);
    for (const FreqIndex& k : family) {
        const TriSamples samples =
            sample_triangle([&](const HPoint& t) { return tc(k, t); }, n, TriNodeSet::full);
        for (int trial = 0; trial < 5; ++trial) {
            const HPoint t = random_triangle_point(gen);
            CHECK(std::abs(interp_triangle_cosine(samples, t) - tc(k, t)) < 1e-10);
        }
    }

    const TriSamples ones =
        sample_triangle([](const HPoint&) { return cplx(1.0, 0.0); }, n, TriNodeSet::full);
    for (int trial = 0; trial < 10; ++trial) {
        const HPoint t = random_triangle_point(gen);
        CHECK(std::abs(interp_triangle_cosine(ones, t) - cplx(1.0, 0.0)) < 1e-10);
    }
}

TEST_CASE("grid cubature integrates the even family through degree 2n - 1") {
    for (int n : {2, 3, 4, 6}) {
        const CubatureRule rule = triangle_cubature(n);
        CHECK(rule.degree == 2 * n - 1);
        double weight_sum = 0.0;
        for (double w : rule.weights) {
            CHECK(w > 0.0);
            weight_sum += w;
        }
        CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-13));

        for (const FreqIndex& k : enumerate_indices(IndexSet::tri_full, 2 * n - 1)) {
            const bool zero = k.k1 == 0 && k.k2 == 0 && k.k3 == 0;
            const double expected = zero ? 1.0 : 0.0;
            CHECK(std::abs(apply_cubature(rule, [&](const HPoint& t) { return tc(k, t); }) -
                           expected) < 1e-10);
        }

        // Sharpness: some index of total degree 2n escapes the rule.
        double worst = 0.0;
        for (int k1 = 0; k1 <= 2 * n; ++k1) {
            const FreqIndex k(k1, 2 * n - k1);
            worst = std::max(
                worst,
                std::abs(apply_cubature(rule, [&](const HPoint& t) { return tc(k, t); })));
        }
        CHECK(worst > 1e-6);
    }
}

TEST_CASE("triangle lebesgue constants are stable and modest") {
    const double cos4 = lebesgue_constant_triangle(4, TriInterp::cosine, 20);
    CHECK(cos4 >= 1.0);
    const double cos4_fine = lebesgue_constant_triangle(4, TriInterp::cosine, 30);
    CHECK(std::abs(cos4_fine - cos4) < 0.05 * cos4);
    const double sin4 = lebesgue_constant_triangle(4, TriInterp::sine, 20);
    CHECK(sin4 >= 1.0);
    CHECK(cos4 < 20.0);
    CHECK(sin4 < 20.0);
}

}  // TEST_SUITE
