#include "dualtest/datasets.hpp"
#include "dualtest/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace dualtest;

TEST(SpiralTest, NoiselessArmsArePointSymmetric) {
    SpiralSpec spec;
    spec.noise_sigma = 0.0;
    spec.n_per_class = 150;
    const auto data = generate_spiral(spec);
    ASSERT_EQ(data.points.size(), 300u);
    for (std::size_t i = 0; i + 1 < data.points.size(); i += 2) {
        EXPECT_EQ(data.labels[i], 1);
        EXPECT_EQ(data.labels[i + 1], -1);
        EXPECT_NEAR(data.points[i].x, -data.points[i + 1].x, 1e-12);
        EXPECT_NEAR(data.points[i].y, -data.points[i + 1].y, 1e-12);
    }
}

TEST(SpiralTest, SameSeedSameData) {
    SpiralSpec spec;
    spec.seed = 123;
    const auto a = generate_spiral(spec);
    const auto b = generate_spiral(spec);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        EXPECT_EQ(a.points[i].x, b.points[i].x);
        EXPECT_EQ(a.points[i].y, b.points[i].y);
    }
    spec.seed = 124;
    const auto c = generate_spiral(spec);
    EXPECT_NE(a.points[0].x, c.points[0].x);
}

TEST(SpiralTest, CountsAndRadiusBound) {
    const SpiralSpec spec;
    const auto data = generate_spiral(spec);
    EXPECT_EQ(data.points.size(), 400u);
    EXPECT_EQ(std::count(data.labels.begin(), data.labels.end(), 1), 200);
    EXPECT_EQ(std::count(data.labels.begin(), data.labels.end(), -1), 200);
    for (const auto &p : data.points) {
        EXPECT_LE(std::hypot(p.x, p.y), spec.radius_scale + 5.0 * spec.noise_sigma);
    }
}

TEST(SpiralTest, RejectsBadSpec) {
    SpiralSpec spec;
    spec.n_per_class = 0;
    EXPECT_THROW(generate_spiral(spec), Error);
    spec = {};
    spec.noise_sigma = -1.0;
    EXPECT_THROW(generate_spiral(spec), Error);
}

TEST(ScoreMixtureTest, MeansAndCounts) {
    const ScoreMixtureSpec spec;
    const auto data = generate_scores(spec);
    ASSERT_EQ(data.scores.size(), 20000u);
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < data.scores.size(); ++i) {
        (data.labels[i] == 0 ? m0 : m1) += data.scores[i];
    }
    EXPECT_NEAR(m0 / 10000.0, -3.0, 0.05);
    EXPECT_NEAR(m1 / 10000.0, 3.0, 0.05);
    EXPECT_EQ(std::count(data.labels.begin(), data.labels.end(), 0), 10000);
}

TEST(ScoreMixtureTest, EmptyClassIsAnError) {
    ScoreMixtureSpec spec;
    spec.n1 = 0;
    EXPECT_THROW(generate_scores(spec), Error);
}

TEST(ScoreMixtureTest, Deterministic) {
    ScoreMixtureSpec spec;
    spec.n1 = spec.n2 = 100;
    EXPECT_EQ(generate_scores(spec).scores, generate_scores(spec).scores);
}

TEST(ScoreMixtureTest, OutliersMoveAwayFromOtherClass) {
    ScoreMixtureSpec plain;
    plain.n1 = plain.n2 = 100;
    auto shifted = plain;
    shifted.outlier_fraction = 0.1;
    shifted.outlier_shift = 4.0;
    const auto a = generate_scores(plain);
    const auto b = generate_scores(shifted);
    for (std::size_t i = 0; i < 200; ++i) {
        const bool tail = (i % 100) >= 90;
        const double delta = b.scores[i] - a.scores[i];
        if (!tail) {
            EXPECT_EQ(delta, 0.0);
        } else if (b.labels[i] == 0) {
            EXPECT_DOUBLE_EQ(delta, -4.0);
        } else {
            EXPECT_DOUBLE_EQ(delta, 4.0);
        }
    }
}
