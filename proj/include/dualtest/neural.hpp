#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dualtest {

/// Dense row-major feature matrix.
class FeatureMatrix {
  public:
    FeatureMatrix(std::size_t rows, std::size_t cols);
    FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] double &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

/// Class counts behind the importance weights: n1 label-0 samples, n2 label-1 samples.
struct WeightedBceSpec {
    std::size_t n1;
    std::size_t n2;
    std::size_t n;

    WeightedBceSpec(std::size_t n1, std::size_t n2);
    /// Counts labels; throws ErrorCode::single_class_input if either class is absent.
    static WeightedBceSpec from_labels(std::span<const int> labels);
};

/// Importance weight: N2/N for label 0, N1/N for label 1.
double sample_weight(int label, const WeightedBceSpec &spec);

inline constexpr double probability_clamp = 1e-12;

double sigmoid(double z) noexcept;

/// L = -sum_n w_n [y_n log p_n + (1 - y_n) log(1 - p_n)], with p clamped to [eps, 1 - eps].
double weighted_bce_loss(std::span<const double> predictions, std::span<const int> labels,
                         const WeightedBceSpec &spec);

struct LogisticModel {
    std::vector<double> weights;
    double bias = 0.0;

    /// Pre-sigmoid value w.x + b; this is the test statistic.
    [[nodiscard]] double logit(std::span<const double> x) const;
    [[nodiscard]] double probability(std::span<const double> x) const { return sigmoid(logit(x)); }
};

struct LogisticGradient {
    std::vector<double> weights;
    double bias = 0.0;
};

/// Weighted loss of a logistic model over a data set.
double logistic_loss(const LogisticModel &model, const FeatureMatrix &features, std::span<const int> labels,
                     const WeightedBceSpec &spec);

/// Analytic gradient of logistic_loss: sum_n w_n (p_n - y_n) [x_n, 1].
LogisticGradient logistic_gradient(const LogisticModel &model, const FeatureMatrix &features,
                                   std::span<const int> labels, const WeightedBceSpec &spec);

struct LogisticFit {
    LogisticModel model;
    /// Loss before the first step and after every epoch.
    std::vector<double> loss_history;
};

/// Full-batch gradient descent from zero weights. The seed is unused by this
/// deterministic optimiser and only kept so every trainer takes one.
LogisticFit train_logistic(const FeatureMatrix &features, std::span<const int> labels, const WeightedBceSpec &spec,
                           double learning_rate, std::size_t epochs, std::uint64_t seed);

/// One hidden tanh layer followed by a linear logit.
struct MlpModel {
    std::size_t inputs = 0;
    std::size_t hidden = 0;
    /// hidden x inputs, row-major.
    std::vector<double> w1;
    std::vector<double> b1;
    std::vector<double> w2;
    double b2 = 0.0;

    [[nodiscard]] double logit(std::span<const double> x) const;
    [[nodiscard]] double probability(std::span<const double> x) const { return sigmoid(logit(x)); }

    /// Small Gaussian initialisation (std 1/sqrt(fan_in)) from a seed.
    static MlpModel initialise(std::size_t inputs, std::size_t hidden, std::uint64_t seed);
};

double mlp_loss(const MlpModel &model, const FeatureMatrix &features, std::span<const int> labels,
                const WeightedBceSpec &spec);

/// Gradient with the same layout as the model parameters.
MlpModel mlp_gradient(const MlpModel &model, const FeatureMatrix &features, std::span<const int> labels,
                      const WeightedBceSpec &spec);

struct MlpFit {
    MlpModel model;
    std::vector<double> loss_history;
};

MlpFit train_mlp(const FeatureMatrix &features, std::span<const int> labels, const WeightedBceSpec &spec,
                 std::size_t hidden, double learning_rate, std::size_t epochs, std::uint64_t seed);

}  // namespace dualtest
