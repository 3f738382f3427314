#include "dualtest/datasets.hpp"

#include "dualtest/error.hpp"
#include "dualtest/random.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace dualtest {

void SpiralSpec::validate() const {
    if (n_per_class == 0) {
        throw Error(ErrorCode::invalid_argument, "spiral needs at least one point per class");
    }
    if (!(std::isfinite(turns) && turns > 0.0)) {
        throw Error(ErrorCode::invalid_argument, fmt::format("spiral turns must be positive, got {}", turns));
    }
    if (!(std::isfinite(noise_sigma) && noise_sigma >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, fmt::format("noise sigma must be nonnegative, got {}", noise_sigma));
    }
    if (!(std::isfinite(radius_scale) && radius_scale > 0.0)) {
        throw Error(ErrorCode::invalid_argument, fmt::format("radius scale must be positive, got {}", radius_scale));
    }
}

SpiralData generate_spiral(const SpiralSpec &spec) {
    spec.validate();
    Rng rng(spec.seed);
    SpiralData out;
    out.points.reserve(2 * spec.n_per_class);
    out.labels.reserve(2 * spec.n_per_class);
    out.parameters.reserve(2 * spec.n_per_class);
    const double sweep = 2.0 * std::numbers::pi * spec.turns;
    for (std::size_t i = 0; i < spec.n_per_class; ++i) {
        const double u = rng.uniform_open_closed();
        const double theta = sweep * u;
        const double r = spec.radius_scale * theta / sweep;
        const double x = r * std::cos(theta);
        const double y = r * std::sin(theta);
        // Noise draws are always consumed so the arm parameters do not depend on sigma.
        const double n1x = rng.normal() * spec.noise_sigma;
        const double n1y = rng.normal() * spec.noise_sigma;
        const double n2x = rng.normal() * spec.noise_sigma;
        const double n2y = rng.normal() * spec.noise_sigma;
        out.points.push_back({x + n1x, y + n1y});
        out.labels.push_back(1);
        out.parameters.push_back(u);
        out.points.push_back({-x + n2x, -y + n2y});
        out.labels.push_back(-1);
        out.parameters.push_back(u);
    }
    return out;
}

void ScoreMixtureSpec::validate() const {
    if (n1 == 0 || n2 == 0) {
        throw Error(ErrorCode::invalid_argument, "score mixture needs n1 >= 1 and n2 >= 1");
    }
    if (!(std::isfinite(sigma1) && sigma1 > 0.0 && std::isfinite(sigma2) && sigma2 > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "score mixture sigmas must be positive");
    }
    if (!(std::isfinite(mean1) && std::isfinite(mean2) && std::isfinite(outlier_shift))) {
        throw Error(ErrorCode::invalid_argument, "score mixture means and shift must be finite");
    }
    if (!(outlier_fraction >= 0.0 && outlier_fraction < 1.0)) {
        throw Error(ErrorCode::invalid_argument,
                    fmt::format("outlier fraction must lie in [0, 1), got {}", outlier_fraction));
    }
}

ScoreData generate_scores(const ScoreMixtureSpec &spec) {
    spec.validate();
    Rng rng(spec.seed);
    ScoreData out;
    out.scores.reserve(spec.n1 + spec.n2);
    out.labels.reserve(spec.n1 + spec.n2);
    // Class 0 is pushed down unless its mean lies strictly above class 1's.
    const double away1 = spec.mean1 > spec.mean2 ? 1.0 : -1.0;
    const auto emit = [&](std::size_t count, double mean, double sigma, double direction, int label) {
        const auto outliers = static_cast<std::size_t>(std::llround(spec.outlier_fraction * static_cast<double>(count)));
        for (std::size_t i = 0; i < count; ++i) {
            double s = rng.normal(mean, sigma);
            if (i >= count - outliers) {
                s += direction * spec.outlier_shift;
            }
            out.scores.push_back(s);
            out.labels.push_back(label);
        }
    };
    emit(spec.n1, spec.mean1, spec.sigma1, away1, 0);
    emit(spec.n2, spec.mean2, spec.sigma2, -away1, 1);
    return out;
}

}  // namespace dualtest
