#include "dualtest/neural.hpp"

#include "dualtest/error.hpp"
#include "dualtest/random.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace dualtest {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw Error(ErrorCode::shape_mismatch,
                    fmt::format("{} values cannot fill a {}x{} matrix", data_.size(), rows, cols));
    }
}

WeightedBceSpec::WeightedBceSpec(std::size_t n1_, std::size_t n2_) : n1(n1_), n2(n2_), n(n1_ + n2_) {
    if (n1 == 0 || n2 == 0) {
        throw Error(ErrorCode::single_class_input, "weighted loss needs samples of both classes");
    }
}

WeightedBceSpec WeightedBceSpec::from_labels(std::span<const int> labels) {
    std::size_t zeros = 0;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == 0) {
            ++zeros;
        } else if (labels[i] == 1) {
            ++ones;
        } else {
            throw Error(ErrorCode::invalid_argument, fmt::format("label must be 0 or 1, got {}", labels[i]), i);
        }
    }
    return WeightedBceSpec(zeros, ones);
}

double sample_weight(int label, const WeightedBceSpec &spec) {
    const double n = static_cast<double>(spec.n);
    return label == 0 ? static_cast<double>(spec.n2) / n : static_cast<double>(spec.n1) / n;
}

double sigmoid(double z) noexcept {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

namespace {

void check_labels(std::size_t expected, std::span<const int> labels) {
    if (labels.size() != expected) {
        throw Error(ErrorCode::length_mismatch, fmt::format("{} rows but {} labels", expected, labels.size()));
    }
}

double weighted_term(double p, int label, const WeightedBceSpec &spec) {
    p = std::clamp(p, probability_clamp, 1.0 - probability_clamp);
    const double ll = label == 1 ? std::log(p) : std::log1p(-p);
    return -sample_weight(label, spec) * ll;
}

}  // namespace

double weighted_bce_loss(std::span<const double> predictions, std::span<const int> labels,
                         const WeightedBceSpec &spec) {
    check_labels(predictions.size(), labels);
    double loss = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        loss += weighted_term(predictions[i], labels[i], spec);
    }
    return loss;
}

double LogisticModel::logit(std::span<const double> x) const {
    if (x.size() != weights.size()) {
        throw Error(ErrorCode::dimension_mismatch,
                    fmt::format("model has {} weights, input has {} features", weights.size(), x.size()));
    }
    double z = bias;
    for (std::size_t k = 0; k < x.size(); ++k) {
        z += weights[k] * x[k];
    }
    return z;
}

double logistic_loss(const LogisticModel &model, const FeatureMatrix &features, std::span<const int> labels,
                     const WeightedBceSpec &spec) {
    check_labels(features.rows(), labels);
    double loss = 0.0;
    for (std::size_t r = 0; r < features.rows(); ++r) {
        loss += weighted_term(model.probability(features.row(r)), labels[r], spec);
    }
    return loss;
}

LogisticGradient logistic_gradient(const LogisticModel &model, const FeatureMatrix &features,
                                   std::span<const int> labels, const WeightedBceSpec &spec) {
    check_labels(features.rows(), labels);
    LogisticGradient g{std::vector<double>(features.cols(), 0.0), 0.0};
    for (std::size_t r = 0; r < features.rows(); ++r) {
        const auto x = features.row(r);
        const double residual = sample_weight(labels[r], spec) * (model.probability(x) - labels[r]);
        for (std::size_t k = 0; k < x.size(); ++k) {
            g.weights[k] += residual * x[k];
        }
        g.bias += residual;
    }
    return g;
}

LogisticFit train_logistic(const FeatureMatrix &features, std::span<const int> labels, const WeightedBceSpec &spec,
                           double learning_rate, std::size_t epochs, std::uint64_t /*seed*/) {
    check_labels(features.rows(), labels);
    const auto observed = WeightedBceSpec::from_labels(labels);
    if (observed.n1 != spec.n1 || observed.n2 != spec.n2) {
        throw Error(ErrorCode::shape_mismatch, "weight spec does not match the label counts");
    }
    if (!(learning_rate > 0.0 && std::isfinite(learning_rate))) {
        throw Error(ErrorCode::invalid_argument, "learning rate must be positive");
    }
    LogisticFit fit{LogisticModel{std::vector<double>(features.cols(), 0.0), 0.0}, {}};
    fit.loss_history.reserve(epochs + 1);
    fit.loss_history.push_back(logistic_loss(fit.model, features, labels, spec));
    for (std::size_t e = 0; e < epochs; ++e) {
        const auto g = logistic_gradient(fit.model, features, labels, spec);
        for (std::size_t k = 0; k < g.weights.size(); ++k) {
            fit.model.weights[k] -= learning_rate * g.weights[k];
        }
        fit.model.bias -= learning_rate * g.bias;
        fit.loss_history.push_back(logistic_loss(fit.model, features, labels, spec));
    }
    return fit;
}

double MlpModel::logit(std::span<const double> x) const {
    if (x.size() != inputs) {
        throw Error(ErrorCode::dimension_mismatch,
                    fmt::format("model expects {} features, input has {}", inputs, x.size()));
    }
    double z = b2;
    for (std::size_t h = 0; h < hidden; ++h) {
        double a = b1[h];
        for (std::size_t k = 0; k < inputs; ++k) {
            a += w1[h * inputs + k] * x[k];
        }
        z += w2[h] * std::tanh(a);
    }
    return z;
}

MlpModel MlpModel::initialise(std::size_t inputs, std::size_t hidden, std::uint64_t seed) {
    if (inputs == 0 || hidden == 0) {
        throw Error(ErrorCode::invalid_argument, "network needs at least one input and one hidden unit");
    }
    Rng rng(seed);
    MlpModel m{inputs, hidden, std::vector<double>(hidden * inputs), std::vector<double>(hidden, 0.0),
               std::vector<double>(hidden), 0.0};
    const double s1 = 1.0 / std::sqrt(static_cast<double>(inputs));
    const double s2 = 1.0 / std::sqrt(static_cast<double>(hidden));
    for (auto &w : m.w1) {
        w = rng.normal(0.0, s1);
    }
    for (auto &w : m.w2) {
        w = rng.normal(0.0, s2);
    }
    return m;
}

double mlp_loss(const MlpModel &model, const FeatureMatrix &features, std::span<const int> labels,
                const WeightedBceSpec &spec) {
    check_labels(features.rows(), labels);
    double loss = 0.0;
    for (std::size_t r = 0; r < features.rows(); ++r) {
        loss += weighted_term(model.probability(features.row(r)), labels[r], spec);
    }
    return loss;
}

MlpModel mlp_gradient(const MlpModel &model, const FeatureMatrix &features, std::span<const int> labels,
                      const WeightedBceSpec &spec) {
    check_labels(features.rows(), labels);
    if (features.cols() != model.inputs) {
        throw Error(ErrorCode::dimension_mismatch, "feature width does not match the network input size");
    }
    const std::size_t ni = model.inputs;
    const std::size_t nh = model.hidden;
    MlpModel g{ni, nh, std::vector<double>(nh * ni, 0.0), std::vector<double>(nh, 0.0), std::vector<double>(nh, 0.0),
               0.0};
    std::vector<double> act(nh);
    for (std::size_t r = 0; r < features.rows(); ++r) {
        const auto x = features.row(r);
        double z = model.b2;
        for (std::size_t h = 0; h < nh; ++h) {
            double a = model.b1[h];
            for (std::size_t k = 0; k < ni; ++k) {
                a += model.w1[h * ni + k] * x[k];
            }
            act[h] = std::tanh(a);
            z += model.w2[h] * act[h];
        }
        const double dz = sample_weight(labels[r], spec) * (sigmoid(z) - labels[r]);
        g.b2 += dz;
        for (std::size_t h = 0; h < nh; ++h) {
            g.w2[h] += dz * act[h];
            const double da = dz * model.w2[h] * (1.0 - act[h] * act[h]);
            g.b1[h] += da;
            for (std::size_t k = 0; k < ni; ++k) {
                g.w1[h * ni + k] += da * x[k];
            }
        }
    }
    return g;
}

MlpFit train_mlp(const FeatureMatrix &features, std::span<const int> labels, const WeightedBceSpec &spec,
                 std::size_t hidden, double learning_rate, std::size_t epochs, std::uint64_t seed) {
    check_labels(features.rows(), labels);
    if (!(learning_rate > 0.0 && std::isfinite(learning_rate))) {
        throw Error(ErrorCode::invalid_argument, "learning rate must be positive");
    }
    MlpFit fit{MlpModel::initialise(features.cols(), hidden, seed), {}};
    fit.loss_history.push_back(mlp_loss(fit.model, features, labels, spec));
    const auto step = [learning_rate](std::vector<double> &p, const std::vector<double> &d) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            p[k] -= learning_rate * d[k];
        }
    };
    for (std::size_t e = 0; e < epochs; ++e) {
        const auto g = mlp_gradient(fit.model, features, labels, spec);
        step(fit.model.w1, g.w1);
        step(fit.model.b1, g.b1);
        step(fit.model.w2, g.w2);
        fit.model.b2 -= learning_rate * g.b2;
        fit.loss_history.push_back(mlp_loss(fit.model, features, labels, spec));
    }
    return fit;
}

}  // namespace dualtest
