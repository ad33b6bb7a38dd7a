#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hexfour/hex_fourier.hpp"
#include "hexfour/lattice.hpp"

using namespace hexfour;

namespace {

HPoint random_hex_point(std::mt19937& gen) {
    std::uniform_real_distribution<double> dist(-0.95, 0.95);
    for (;;) {
        const double t1 = dist(gen);
        const double t2 = dist(gen);
        if (std::abs(t1 + t2) < 0.95) return HPoint(t1, t2);
    }
}

FreqIndex random_index(std::mt19937& gen, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    return FreqIndex(dist(gen), dist(gen));
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("homogeneous points validate and convert") {
    const HPoint p(0.25, -0.75);
    CHECK(p.t3 == doctest::Approx(0.5));
    CHECK_THROWS_AS(HPoint(0.1, 0.1, 0.1), std::invalid_argument);

    const HPoint q = to_homogeneous({2.0 / std::sqrt(3.0), 0.0});
    CHECK(q.t1 == doctest::Approx(1.0));
    CHECK(q.t2 == doctest::Approx(0.0));
    CHECK(q.t3 == doctest::Approx(-1.0));

    std::mt19937 gen(11);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const Vec2 x{dist(gen), dist(gen)};
        const Vec2 back = from_homogeneous(to_homogeneous(x));
        CHECK(std::abs(back.x1 - x.x1) < 1e-12);
        CHECK(std::abs(back.x2 - x.x2) < 1e-12);
        const HPoint t = to_homogeneous(x);
        CHECK(std::abs(t.t1 + t.t2 + t.t3) < 1e-12);
    }
}

TEST_CASE("frequency indices validate and act like vectors") {
    CHECK_THROWS_AS(FreqIndex(1, 1, 1), std::invalid_argument);
    const FreqIndex k(2, -1);
    CHECK(k.k3 == -1);
    const HPoint t(0.5, 0.25);
    CHECK(dot(k, t) == doctest::Approx(2 * 0.5 - 0.25 + 0.75));
    const HPoint node = node_point(FreqIndex(3, -2), 4);
    CHECK(node.t1 == doctest::Approx(0.75));
    CHECK(node.t2 == doctest::Approx(-0.5));
}

TEST_CASE("congruence mod 3n matches equality of grid exponentials") {
    const int n = 3;
    CHECK(congruent_mod3n(FreqIndex(2 * n, -n, -n), FreqIndex(-n, 2 * n, -n), n));
    CHECK_FALSE(congruent_mod3n(FreqIndex(1, 0, -1), FreqIndex(0, 1, -1), n));

    std::mt19937 gen(17);
    const std::vector<FreqIndex> grid = enumerate_indices(IndexSet::hex_fundamental, n);
    int congruent_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const FreqIndex a = random_index(gen, 2 * n);
        const FreqIndex b = random_index(gen, 2 * n);
        double max_diff = 0.0;
        for (const FreqIndex& j : grid) {
            const HPoint p = node_point(j, n);
            max_diff = std::max(max_diff, std::abs(phi(a, p) - phi(b, p)));
        }
        const bool same_on_grid = max_diff < 1e-9;
        CHECK(same_on_grid == congruent_mod3n(a, b, n));
        if (same_on_grid) ++congruent_seen;
    }
    // The sample must exercise both outcomes for the check to mean anything.
    CHECK(congruent_seen > 0);
    CHECK(congruent_seen < 300);
}

TEST_CASE("group composition, signs and actions are consistent") {
    CHECK(compose(GroupElement::s1, GroupElement::s2) == GroupElement::r12);
    CHECK(compose(GroupElement::s2, GroupElement::s1) == GroupElement::r21);
    CHECK(compose(GroupElement::r12, compose(GroupElement::r12, GroupElement::r12)) ==
          GroupElement::identity);
    for (GroupElement s : {GroupElement::s1, GroupElement::s2, GroupElement::s3})
        CHECK(compose(s, s) == GroupElement::identity);

    const HPoint t(0.3, 0.45);
    const HPoint s1t = act(GroupElement::s1, t);
    CHECK(s1t.t1 == doctest::Approx(-t.t1));
    CHECK(s1t.t2 == doctest::Approx(-t.t3));
    CHECK(s1t.t3 == doctest::Approx(-t.t2));

    std::mt19937 gen(23);
    for (GroupElement a : group_elements) {
        for (GroupElement b : group_elements) {
            CHECK(group_sign(compose(a, b)) == group_sign(a) * group_sign(b));
            const HPoint u = random_hex_point(gen);
            const HPoint lhs = act(compose(a, b), u);
            const HPoint rhs = act(b, act(a, u));
            CHECK(std::abs(lhs.t1 - rhs.t1) < 1e-14);
            CHECK(std::abs(lhs.t2 - rhs.t2) < 1e-14);
            // Associativity over all triples.
            for (GroupElement c : group_elements)
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
    }
}

TEST_CASE("index action is dual to the inverse point action") {
    std::mt19937 gen(31);
    for (GroupElement g : group_elements) {
        CHECK(compose(g, inverse(g)) == GroupElement::identity);
        CHECK(compose(inverse(g), g) == GroupElement::identity);
        for (int trial = 0; trial < 20; ++trial) {
            const FreqIndex k = random_index(gen, 5);
            const HPoint t = random_hex_point(gen);
            CHECK(std::abs(dot(act(g, k), t) - dot(k, act(inverse(g), t))) < 1e-12);
        }
    }
}

TEST_CASE("projections are idempotent and split parity") {
    std::mt19937 gen(37);
    auto f = [](const HPoint& t) {
        return phi(FreqIndex(2, -1), t) + 0.5 * phi(FreqIndex(1, 3), t);
    };
    for (int sign : {1, -1}) {
        auto once = [&](const HPoint& t) { return project(sign, f, t); };
        for (int trial = 0; trial < 10; ++trial) {
            const HPoint t = random_hex_point(gen);
            CHECK(std::abs(project(sign, once, t) - once(t)) < 1e-13);
        }
    }
    CHECK_THROWS_AS(project(0, f, HPoint(0.0, 0.0)), std::invalid_argument);

    // Manual six-term average against the helper.
    const HPoint t(0.21, -0.4);
    cplx rot = f(t) + f(act(GroupElement::r12, t)) + f(act(GroupElement::r21, t));
    cplx ref = f(act(GroupElement::s1, t)) + f(act(GroupElement::s2, t)) +
               f(act(GroupElement::s3, t));
    CHECK(std::abs(project(1, f, t) - (rot + ref) / 6.0) < 1e-15);
    CHECK(std::abs(project(-1, f, t) - (rot - ref) / 6.0) < 1e-15);
}

TEST_CASE("index families have the expected sizes and order") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(enumerate_indices(IndexSet::hex_fundamental, n).size() ==
              static_cast<std::size_t>(3 * n * n));
        CHECK(enumerate_indices(IndexSet::hex_symmetric, n).size() ==
              static_cast<std::size_t>(3 * n * n + 3 * n + 1));
        CHECK(enumerate_indices(IndexSet::hex_interior, n).size() ==
              static_cast<std::size_t>(3 * n * n - 3 * n + 1));
        CHECK(enumerate_indices(IndexSet::tri_full, n).size() ==
              static_cast<std::size_t>((n + 1) * (n + 2) / 2));
        if (n >= 3)
            CHECK(enumerate_indices(IndexSet::tri_interior, n).size() ==
                  static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    }

    const std::vector<FreqIndex> tri1 = enumerate_indices(IndexSet::tri_full, 1);
    REQUIRE(tri1.size() == 3);
    CHECK(tri1[0] == FreqIndex(0, 0));
    CHECK(tri1[1] == FreqIndex(0, 1));
    CHECK(tri1[2] == FreqIndex(1, 0));

    const std::vector<FreqIndex> fund = enumerate_indices(IndexSet::hex_fundamental, 2);
    for (std::size_t i = 1; i < fund.size(); ++i) {
        const bool ordered = fund[i - 1].k1 < fund[i].k1 ||
                             (fund[i - 1].k1 == fund[i].k1 && fund[i - 1].k2 < fund[i].k2);
        CHECK(ordered);
    }
    for (const FreqIndex& j : fund) {
        CHECK(j.k1 >= -2);
        CHECK(j.k1 < 2);
        CHECK(j.k2 >= -2);
        CHECK(j.k2 < 2);
        CHECK(-j.k3 >= -2);
        CHECK(-j.k3 < 2);
    }
}

TEST_CASE("classification weighs hexagon nodes by congruence class size") {
    const int n = 4;
    CHECK(classify(FreqIndex(0, 0), n, Domain::hexagon).node_class == NodeClass::interior);
    CHECK(classify(FreqIndex(0, 0), n, Domain::hexagon).weight_c == doctest::Approx(1.0));
    const PointClass edge = classify(FreqIndex(4, -2), n, Domain::hexagon);
    CHECK(edge.node_class == NodeClass::edge);
    CHECK(edge.weight_c == doctest::Approx(0.5));
    const PointClass vertex = classify(FreqIndex(4, 0), n, Domain::hexagon);
    CHECK(vertex.node_class == NodeClass::vertex);
    CHECK(vertex.weight_c == doctest::Approx(1.0 / 3.0));
    CHECK(classify(FreqIndex(4, -4), n, Domain::hexagon).node_class == NodeClass::vertex);
    CHECK_THROWS_AS(classify(FreqIndex(5, 0), n, Domain::hexagon), std::invalid_argument);

    for (int m = 1; m <= 8; ++m) {
        double total = 0.0;
        for (const FreqIndex& j : enumerate_indices(IndexSet::hex_symmetric, m))
            total += classify(j, m, Domain::hexagon).weight_c;
        CHECK(total == doctest::Approx(3.0 * m * m).epsilon(1e-12));
    }
}

TEST_CASE("classification weighs triangle nodes by orbit size") {
    const int n = 4;
    CHECK(classify(FreqIndex(0, 0), n, Domain::triangle).weight_lambda == doctest::Approx(1.0));
    CHECK(classify(FreqIndex(4, 0), n, Domain::triangle).weight_lambda == doctest::Approx(1.0));
    CHECK(classify(FreqIndex(0, 4), n, Domain::triangle).weight_lambda == doctest::Approx(1.0));
    CHECK(classify(FreqIndex(1, 0), n, Domain::triangle).weight_lambda == doctest::Approx(3.0));
    CHECK(classify(FreqIndex(1, 3), n, Domain::triangle).weight_lambda == doctest::Approx(3.0));
    CHECK(classify(FreqIndex(1, 1), n, Domain::triangle).weight_lambda == doctest::Approx(6.0));
    CHECK_THROWS_AS(classify(FreqIndex(-1, 1), n, Domain::triangle), std::invalid_argument);
    CHECK_THROWS_AS(classify(FreqIndex(1, 1), 1, Domain::triangle), std::invalid_argument);

    for (int m = 1; m <= 8; ++m) {
        double total = 0.0;
        for (const FreqIndex& j : enumerate_indices(IndexSet::tri_full, m))
            total += classify(j, m, Domain::triangle).weight_lambda;
        CHECK(total == doctest::Approx(3.0 * m * m).epsilon(1e-12));
    }
}

TEST_CASE("periodicity probe accepts lattice exponentials only") {
    const HPoint t(0.12, 0.31);
    CHECK(is_h_periodic_probe([](const HPoint& u) { return phi(FreqIndex(2, -3), u); }, t));
    CHECK_FALSE(is_h_periodic_probe(
        [](const HPoint& u) { return cplx(std::exp(u.t1), 0.0); }, t));
}

namespace {

DftPlan hexagon_plan(int n) {
    const double r3 = std::numbers::sqrt3;
    const Mat22 h{r3, 0.0, -1.0, 2.0};
    const Mat22 b{r3 * n / 2.0, 0.0, -n / 2.0, static_cast<double>(n)};
    return build_dft_plan(h, b, hexagon_spectral(), hexagon_spectral(n / 2.0));
}

}  // namespace

TEST_CASE("hexagon plans enumerate the fundamental family") {
    for (int n : {1, 2, 3, 4, 8}) {
        const DftPlan plan = hexagon_plan(n);
        CHECK(plan.det_n == 3 * n * n);
        CHECK(plan.n.a11 == doctest::Approx(2.0 * n));
        CHECK(plan.n.a12 == doctest::Approx(-1.0 * n));
        CHECK(plan.n.a21 == doctest::Approx(-1.0 * n));
        CHECK(plan.n.a22 == doctest::Approx(2.0 * n));

        const std::vector<FreqIndex> expected = enumerate_indices(IndexSet::hex_fundamental, n);
        REQUIRE(plan.sample_indices.size() == expected.size());
        REQUIRE(plan.frequency_indices.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(plan.sample_indices[i].k1 == expected[i].k1);
            CHECK(plan.sample_indices[i].k2 == expected[i].k2);
            CHECK(plan.frequency_indices[i].k1 == expected[i].k1);
            CHECK(plan.frequency_indices[i].k2 == expected[i].k2);
        }

        // Sample nodes are the grid points j / n in homogeneous coordinates.
        const HPoint t = to_homogeneous(plan_sample_point(plan, plan.sample_indices.front()));
        CHECK(t.t1 == doctest::Approx(static_cast<double>(plan.sample_indices.front().k1) / n));
        CHECK(t.t2 == doctest::Approx(static_cast<double>(plan.sample_indices.front().k2) / n));
    }
}

TEST_CASE("plan orthogonality defects vanish and detect the congruent case") {
    for (int n : {2, 4}) {
        const DftPlan plan = hexagon_plan(n);
        for (const IVec2& k : plan.frequency_indices)
            CHECK(plan_orthogonality_defect(plan, k) < 1e-12);
        // Indices congruent to zero give the other branch of the indicator.
        CHECK(plan_orthogonality_defect(plan, IVec2{2LL * n, -1LL * n}) < 1e-12);
        CHECK(plan_orthogonality_defect(plan, IVec2{1LL * n, 1LL * n}) < 1e-12);
        // A wrong expectation would show up as a defect near 1.
        CHECK(plan_orthogonality_defect(plan, IVec2{0, 0}) < 1e-12);
    }
}

TEST_CASE("random diagonal plans satisfy the orthogonality relation") {
    std::mt19937 gen(41);
    std::uniform_real_distribution<double> scale(0.5, 3.0);
    std::uniform_int_distribution<int> count(1, 6);
    for (int trial = 0; trial < 5; ++trial) {
        const double a1 = scale(gen);
        const double a2 = scale(gen);
        const int m1 = count(gen);
        const int m2 = count(gen);
        const Mat22 a{a1, 0.0, 0.0, a2};
        const Mat22 b{m1 / a1, 0.0, 0.0, m2 / a2};
        const DftPlan plan =
            build_dft_plan(a, b, box_spectral(a1, a2), box_spectral(m1 / a1, m2 / a2));
        CHECK(plan.det_n == static_cast<long long>(m1) * m2);
        for (const IVec2& k : plan.frequency_indices)
            CHECK(plan_orthogonality_defect(plan, k) < 1e-12);
        CHECK(plan_orthogonality_defect(plan, IVec2{m1, m2}) < 1e-12);
    }
}

TEST_CASE("plans reject non-integer products and bad spectral sets") {
    const Mat22 a{1.0, 0.0, 0.0, 1.0};
    const Mat22 b{1.5, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(build_dft_plan(a, b, box_spectral(1.0, 1.0), box_spectral(1.5, 1.0)),
                    std::invalid_argument);
    // A spectral set of the wrong volume cannot enumerate |det N| points.
    const Mat22 b2{2.0, 0.0, 0.0, 2.0};
    CHECK_THROWS_AS(build_dft_plan(a, b2, box_spectral(0.5, 0.5), box_spectral(2.0, 2.0)),
                    std::runtime_error);
}

TEST_CASE("plan interpolation matches samples and reproduces exponentials") {
    const int n = 2;
    const DftPlan plan = hexagon_plan(n);
    const Mat22 a_inv = plan.a.inverse();

    auto smooth = [](const Vec2& x) {
        return cplx(std::cos(1.7 * x.x1) * std::sin(0.9 * x.x2), std::sin(x.x1 + 0.3 * x.x2));
    };
    std::vector<cplx> samples;
    for (const IVec2& j : plan.sample_indices) samples.push_back(smooth(plan_sample_point(plan, j)));
    for (std::size_t i = 0; i < plan.sample_indices.size(); ++i) {
        const Vec2 node = plan_sample_point(plan, plan.sample_indices[i]);
        CHECK(std::abs(plan_interpolate(plan, samples, node) - samples[i]) < 1e-10);
    }

    std::mt19937 gen(47);
    std::uniform_real_distribution<double> dist(-0.8, 0.8);
    for (const IVec2& k : plan.frequency_indices) {
        auto wave = [&](const Vec2& x) {
            const Vec2 u = a_inv.mul(x);
            return std::polar(1.0, 2.0 * std::numbers::pi * (k.k1 * u.x1 + k.k2 * u.x2));
        };
        std::vector<cplx> wave_samples;
        for (const IVec2& j : plan.sample_indices)
            wave_samples.push_back(wave(plan_sample_point(plan, j)));
        for (int trial = 0; trial < 3; ++trial) {
            const Vec2 x{dist(gen), dist(gen)};
            CHECK(std::abs(plan_interpolate(plan, wave_samples, x) - wave(x)) < 1e-11);
        }
    }
}

}  // TEST_SUITE
