// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "primrrt/errors.hpp"
#include "primrrt/geometry.hpp"
#include "support/oracles.hpp"

namespace primrrt {
namespace {

TEST(NormalizeAngle, Examples) {
    EXPECT_DOUBLE_EQ(normalize_angle(kPi / 4), kPi / 4);
    EXPECT_NEAR(normalize_angle(3 * kPi), kPi, 1e-15);
    EXPECT_EQ(normalize_angle(-kPi), kPi);
    EXPECT_EQ(normalize_angle(kPi), kPi);
    EXPECT_EQ(normalize_angle(0.0), 0.0);
}

TEST(NormalizeAngle, RejectsNonFinite) {
    EXPECT_THROW((void)normalize_angle(std::numeric_limits<double>::quiet_NaN()), InvalidArgument);
    EXPECT_THROW((void)normalize_angle(std::numeric_limits<double>::infinity()), InvalidArgument);
}

TEST(NormalizeAngle, RangeCongruenceAndIdempotence) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> any(-1e4, 1e4);
    for (int i = 0; i < 10000; ++i) {
        const double x = any(rng);
        const double n = normalize_angle(x);
        ASSERT_GT(n, -kPi);
        ASSERT_LE(n, kPi);
        const double k = (x - n) / kTwoPi;
        ASSERT_NEAR(k, std::round(k), 1e-9);
        ASSERT_EQ(normalize_angle(n), n);
    }
}

TEST(Compose, Examples) {
    EXPECT_TRUE(approx_equal(compose({0, 0, 0}, {1, 0, 0}), Pose{1, 0, 0}));
    EXPECT_TRUE(approx_equal(compose({5, 5, kPi}, {0, 0, 0}), Pose{5, 5, kPi}));

    // Rotating (0.5, 0.5) by pi/2 gives (-0.5, 0.5).
    const Pose base{1, 2, kPi / 2};
    const RelativePose local{0.5, 0.5, kPi / 2};
    const Pose expected{0.5, 2.5, kPi};
    EXPECT_TRUE(approx_equal(compose(base, local), expected));
    EXPECT_TRUE(approx_equal(oracle::compose_matrix(base, local), expected));
}

TEST(Compose, AgreesWithMatrixOracle) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-50, 50);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 5000; ++i) {
        const Pose base{coord(rng), coord(rng), ang(rng)};
        const RelativePose local{coord(rng), coord(rng), ang(rng)};
        const Pose got = compose(base, local);
        ASSERT_TRUE(approx_equal(got, oracle::compose_matrix(base, local), 1e-9));
        ASSERT_GT(got.theta, -kPi);
        ASSERT_LE(got.theta, kPi);
    }
}

TEST(Compose, IdentityAndChainedAssociativity) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-10, 10);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 2000; ++i) {
        const Pose p{coord(rng), coord(rng), ang(rng)};
        ASSERT_EQ(compose(p, {}), (Pose{p.x, p.y, normalize_angle(p.theta)}));

        const RelativePose a{coord(rng), coord(rng), ang(rng)};
        const RelativePose b{coord(rng), coord(rng), ang(rng)};
        // (p + a) + b == p + (a + b), where a + b is itself a composition.
        const Pose ab = compose(Pose{a.dx, a.dy, a.dtheta}, b);
        const Pose lhs = compose(compose(p, a), b);
        const Pose rhs = compose(p, {ab.x, ab.y, ab.theta});
        ASSERT_TRUE(approx_equal(lhs, rhs, 1e-9));
    }
}

TEST(Distance, Examples) {
    EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(distance({2, 2}, {2, 2}), 0.0);
    EXPECT_NEAR(distance({1, 0}, {0, 1}), 1.41421356, 1e-8);
}

TEST(Distance, SymmetricAndTriangleInequality) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-100, 100);
    for (int i = 0; i < 10000; ++i) {
        const Point a{coord(rng), coord(rng)};
        const Point b{coord(rng), coord(rng)};
        const Point c{coord(rng), coord(rng)};
        ASSERT_GE(distance(a, b), 0.0);
        ASSERT_EQ(distance(a, b), distance(b, a));
        ASSERT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST(ApproxEqual, ComparesHeadingsOnTheCircle) {
    EXPECT_TRUE(approx_equal(Pose{0, 0, kPi}, Pose{0, 0, -kPi + 1e-12}));
    EXPECT_FALSE(approx_equal(Pose{0, 0, 0}, Pose{0, 0, 1e-6}));
    EXPECT_FALSE(approx_equal(Pose{0, 0, 0}, Pose{std::numeric_limits<double>::quiet_NaN(), 0, 0}));
}

}  // namespace
}  // namespace primrrt
