#include "dualtest/svm.hpp"

#include "dualtest/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace dualtest {

namespace {

constexpr double support_threshold = 1e-8;
constexpr double min_curvature = 1e-12;

bool finite(const Point2 &p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

KernelParams::KernelParams(double gamma) : gamma_(gamma) {
    if (!(std::isfinite(gamma) && gamma > 0.0)) {
        throw Error(ErrorCode::invalid_argument, fmt::format("kernel gamma must be positive and finite, got {}", gamma));
    }
}

double KernelParams::operator()(const Point2 &a, const Point2 &b) const noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::exp(-gamma_ * (dx * dx + dy * dy));
}

void SmoSettings::validate() const {
    if (!(std::isfinite(c) && c > 0.0)) {
        throw Error(ErrorCode::invalid_argument, fmt::format("box constraint C must be positive, got {}", c));
    }
    if (!(std::isfinite(tolerance) && tolerance > 0.0)) {
        throw Error(ErrorCode::invalid_argument, fmt::format("tolerance must be positive, got {}", tolerance));
    }
    if (max_passes == 0) {
        throw Error(ErrorCode::invalid_argument, "max_passes must be positive");
    }
}

SvmModel::SvmModel(std::vector<Point2> support_vectors, std::vector<double> duals, double bias, KernelParams kernel,
                   double c)
    : support_vectors_(std::move(support_vectors)), duals_(std::move(duals)), bias_(bias), kernel_(kernel), c_(c) {
    if (support_vectors_.empty() || support_vectors_.size() != duals_.size()) {
        throw Error(ErrorCode::dimension_mismatch,
                    fmt::format("model needs L >= 1 support vectors with one dual each, got {} and {}",
                                support_vectors_.size(), duals_.size()));
    }
    if (!std::isfinite(bias_) || !(c_ > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "model bias must be finite and C positive");
    }
    for (std::size_t l = 0; l < duals_.size(); ++l) {
        if (!finite(support_vectors_[l]) || !std::isfinite(duals_[l])) {
            throw Error(ErrorCode::non_finite_value, "support vector or dual coefficient is not finite", l);
        }
    }
}

double SvmModel::decision_function(const Point2 &x) const {
    if (!finite(x)) {
        throw Error(ErrorCode::non_finite_value, "query point must be finite");
    }
    double g = bias_;
    for (std::size_t l = 0; l < support_vectors_.size(); ++l) {
        g += duals_[l] * kernel_(x, support_vectors_[l]);
    }
    return g;
}

SvmFit train_svm(std::span<const Point2> points, std::span<const int> labels, const KernelParams &kernel,
                 const SmoSettings &settings) {
    settings.validate();
    const std::size_t n = points.size();
    if (n != labels.size()) {
        throw Error(ErrorCode::dimension_mismatch,
                    fmt::format("{} points but {} labels", points.size(), labels.size()));
    }
    if (n < 2) {
        throw Error(ErrorCode::dimension_mismatch, "need at least two training points");
    }
    std::size_t positives = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] != 1 && labels[i] != -1) {
            throw Error(ErrorCode::invalid_argument, fmt::format("SVM labels must be +1 or -1, got {}", labels[i]), i);
        }
        if (!finite(points[i])) {
            throw Error(ErrorCode::non_finite_value, "training point is not finite", i);
        }
        positives += labels[i] == 1 ? 1 : 0;
    }
    if (positives == 0 || positives == n) {
        throw Error(ErrorCode::single_class_input, "SVM training needs both labels present");
    }

    const double c = settings.c;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = static_cast<double>(labels[i]);
    }
    // Q_ij = y_i y_j K(x_i, x_j)
    std::vector<double> q(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = y[i] * y[j] * kernel(points[i], points[j]);
            q[i * n + j] = v;
            q[j * n + i] = v;
        }
    }

    // Minimise f(a) = 0.5 a'Qa - sum(a) subject to 0 <= a <= C, y'a = 0.
    // grad = Qa - 1; the violation score of point t is F_t = -y_t grad_t.
    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n, -1.0);
    const auto in_up = [&](std::size_t t) { return y[t] > 0 ? alpha[t] < c : alpha[t] > 0.0; };
    const auto in_low = [&](std::size_t t) { return y[t] > 0 ? alpha[t] > 0.0 : alpha[t] < c; };
    const auto dual_objective = [&] {
        double f = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            f += alpha[t] * (grad[t] - 1.0);
        }
        return -0.5 * f;
    };

    const std::size_t max_iterations = settings.max_passes * n;
    std::vector<double> trace;
    std::size_t iterations = 0;
    bool converged = false;
    double gap = std::numeric_limits<double>::infinity();

    while (true) {
        // Maximal violating pair; strict comparisons keep the lowest index on ties.
        std::size_t i = n;
        std::size_t j = n;
        double f_up = -std::numeric_limits<double>::infinity();
        double f_low = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < n; ++t) {
            const double score = -y[t] * grad[t];
            if (in_up(t) && score > f_up) {
                f_up = score;
                i = t;
            }
            if (in_low(t) && score < f_low) {
                f_low = score;
                j = t;
            }
        }
        gap = f_up - f_low;
        if (gap <= settings.tolerance) {
            converged = true;
            break;
        }
        if (iterations >= max_iterations) {
            break;
        }

        // Move a_i by +y_i s and a_j by -y_j s (s >= 0) keeps y'a fixed.
        double curvature = q[i * n + i] + q[j * n + j] - 2.0 * y[i] * y[j] * q[i * n + j];
        curvature = std::max(curvature, min_curvature);
        double step = gap / curvature;
        const double room_i = y[i] > 0 ? c - alpha[i] : alpha[i];
        const double room_j = y[j] > 0 ? alpha[j] : c - alpha[j];
        bool clipped_i = false;
        bool clipped_j = false;
        if (room_i <= step) {
            step = room_i;
            clipped_i = true;
        }
        if (room_j <= step) {
            step = room_j;
            clipped_j = true;
            clipped_i = clipped_i && room_i == room_j;
        }

        const double old_i = alpha[i];
        const double old_j = alpha[j];
        alpha[i] = old_i + y[i] * step;
        alpha[j] = old_j - y[j] * step;
        if (clipped_i) {
            alpha[i] = y[i] > 0 ? c : 0.0;
        }
        if (clipped_j) {
            alpha[j] = y[j] > 0 ? 0.0 : c;
        }
        const double delta_i = alpha[i] - old_i;
        const double delta_j = alpha[j] - old_j;
        for (std::size_t t = 0; t < n; ++t) {
            grad[t] += q[t * n + i] * delta_i + q[t * n + j] * delta_j;
        }
        ++iterations;
        trace.push_back(dual_objective());
    }

    // Bias: mean violation score over free vectors, else the midpoint of the feasible interval.
    double free_sum = 0.0;
    std::size_t free_count = 0;
    double up_max = -std::numeric_limits<double>::infinity();
    double low_min = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
        const double score = -y[t] * grad[t];
        if (alpha[t] > 0.0 && alpha[t] < c) {
            free_sum += score;
            ++free_count;
        }
        if (in_up(t)) {
            up_max = std::max(up_max, score);
        }
        if (in_low(t)) {
            low_min = std::min(low_min, score);
        }
    }
    double bias = 0.0;
    if (free_count > 0) {
        bias = free_sum / static_cast<double>(free_count);
    } else if (std::isfinite(up_max) && std::isfinite(low_min)) {
        bias = 0.5 * (up_max + low_min);
    } else {
        bias = std::isfinite(up_max) ? up_max : low_min;
    }

    std::vector<Point2> support;
    std::vector<double> duals;
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] > support_threshold) {
            support.push_back(points[t]);
            duals.push_back(alpha[t] * y[t]);
        }
    }
    if (support.empty()) {
        // Only reachable when C is so small every multiplier sits below the threshold.
        support.push_back(points[0]);
        duals.push_back(0.0);
    }

    return SvmFit{SvmModel(std::move(support), std::move(duals), bias, kernel, c),
                  std::move(alpha),
                  converged,
                  iterations,
                  gap,
                  std::move(trace)};
}

std::vector<double> kkt_residuals(const SvmModel &model, std::span<const double> alphas,
                                  std::span<const Point2> points, std::span<const int> labels) {
    if (alphas.size() != points.size() || points.size() != labels.size()) {
        throw Error(ErrorCode::dimension_mismatch, "alphas, points and labels must have equal length");
    }
    const double c = model.c();
    std::vector<double> out(points.size());
    for (std::size_t t = 0; t < points.size(); ++t) {
        const double margin = static_cast<double>(labels[t]) * model.decision_function(points[t]);
        if (alphas[t] <= support_threshold) {
            out[t] = std::max(0.0, 1.0 - margin);
        } else if (alphas[t] >= c - support_threshold * c) {
            out[t] = std::max(0.0, margin - 1.0);
        } else {
            out[t] = std::abs(margin - 1.0);
        }
    }
    return out;
}

double DecisionGrid::center_x(std::size_t col) const {
    const double step = (x_range.second - x_range.first) / static_cast<double>(resolution);
    return x_range.first + (static_cast<double>(col) + 0.5) * step;
}

double DecisionGrid::center_y(std::size_t row) const {
    const double step = (y_range.second - y_range.first) / static_cast<double>(resolution);
    return y_range.first + (static_cast<double>(row) + 0.5) * step;
}

DecisionGrid decision_grid(const SvmModel &model, std::pair<double, double> x_range, std::pair<double, double> y_range,
                           std::size_t resolution) {
    const auto valid = [](std::pair<double, double> r) {
        return std::isfinite(r.first) && std::isfinite(r.second) && r.first < r.second;
    };
    if (!valid(x_range) || !valid(y_range) || resolution < 2) {
        throw Error(ErrorCode::bad_range, "grid needs lo < hi on both axes and resolution >= 2");
    }
    DecisionGrid grid{x_range, y_range, resolution, std::vector<double>(resolution * resolution)};
    for (std::size_t row = 0; row < resolution; ++row) {
        const double cy = grid.center_y(row);
        for (std::size_t col = 0; col < resolution; ++col) {
            grid.values[row * resolution + col] = model.decision_function({grid.center_x(col), cy});
        }
    }
    return grid;
}

}  // namespace dualtest
