#pragma once

#include "dualtest/svm.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dualtest {

/// Two-arm Archimedean spiral. Class C1 (SVM label +1) follows
/// r = radius_scale * u, theta = 2 pi turns u for u in (0, 1]; class C2
/// (label -1) is the same arm rotated by pi. Both arms share each u draw and
/// get independent isotropic Gaussian noise.
struct SpiralSpec {
    std::size_t n_per_class = 200;
    double turns = 1.75;
    double noise_sigma = 0.05;
    double radius_scale = 1.0;
    std::uint64_t seed = 7;

    void validate() const;
};

struct SpiralData {
    std::vector<Point2> points;
    /// +1 for C1, -1 for C2. Points are interleaved C1, C2, C1, ...
    std::vector<int> labels;
    /// Arm parameter u of each point.
    std::vector<double> parameters;
};

SpiralData generate_spiral(const SpiralSpec &spec);

/// Gaussian score mixture: label 0 ~ N(mean1, sigma1), label 1 ~ N(mean2, sigma2).
/// The last round(outlier_fraction * n_c) scores of each class are pushed by
/// outlier_shift further from the other class's mean.
struct ScoreMixtureSpec {
    double mean1 = -3.0;
    double mean2 = 3.0;
    double sigma1 = 1.0;
    double sigma2 = 1.0;
    std::size_t n1 = 10000;
    std::size_t n2 = 10000;
    double outlier_fraction = 0.0;
    double outlier_shift = 0.0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct ScoreData {
    std::vector<double> scores;
    /// 0 or 1; the n1 label-0 rows come first.
    std::vector<int> labels;
};

ScoreData generate_scores(const ScoreMixtureSpec &spec);

}  // namespace dualtest
