#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dualtest {

struct Point2 {
    double x;
    double y;

    friend bool operator==(const Point2 &, const Point2 &) = default;
};

/// RBF kernel K(a, b) = exp(-gamma * |a - b|^2).
class KernelParams {
  public:
    explicit KernelParams(double gamma);

    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double operator()(const Point2 &a, const Point2 &b) const noexcept;

    friend bool operator==(const KernelParams &, const KernelParams &) = default;

  private:
    double gamma_;
};

struct SmoSettings {
    double c = 10.0;
    double tolerance = 1e-3;
    /// Iteration budget in units of training-set size: at most max_passes * n pair updates.
    std::size_t max_passes = 1000;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Trained RBF-kernel SVM: g(x) = sum_l dual_l * K(x, x_l) + bias, where dual_l = alpha_l * y_l.
class SvmModel {
  public:
    SvmModel(std::vector<Point2> support_vectors, std::vector<double> duals, double bias, KernelParams kernel,
             double c);

    [[nodiscard]] std::span<const Point2> support_vectors() const noexcept { return support_vectors_; }
    [[nodiscard]] std::span<const double> duals() const noexcept { return duals_; }
    [[nodiscard]] double bias() const noexcept { return bias_; }
    [[nodiscard]] const KernelParams &kernel() const noexcept { return kernel_; }
    /// Box constraint the model was trained with.
    [[nodiscard]] double c() const noexcept { return c_; }

    /// The discriminant value used as the test statistic.
    [[nodiscard]] double decision_function(const Point2 &x) const;

    friend bool operator==(const SvmModel &, const SvmModel &) = default;

  private:
    std::vector<Point2> support_vectors_;
    std::vector<double> duals_;
    double bias_;
    KernelParams kernel_;
    double c_;
};

struct SvmFit {
    SvmModel model;
    /// Lagrange multipliers for every training point, in input order.
    std::vector<double> alphas;
    bool converged;
    std::size_t iterations;
    /// Final maximal KKT violation m(alpha) - M(alpha).
    double final_gap;
    /// Dual objective sum(alpha) - 0.5 alpha'Q alpha after each pair update.
    std::vector<double> dual_objective_trace;
};

/// Soft-margin SVM by SMO with maximal-violating-pair selection.
///
/// Labels are +1 / -1. Throws ErrorCode::single_class_input,
/// ErrorCode::dimension_mismatch or ErrorCode::non_finite_value. Running out
/// of iterations is not an error: the fit comes back with converged == false.
SvmFit train_svm(std::span<const Point2> points, std::span<const int> labels, const KernelParams &kernel,
                 const SmoSettings &settings);

/// Per-point KKT residual of a fit: how far y*g(x) is outside the interval its
/// multiplier allows (0 if satisfied). Uses `model` to recompute g.
std::vector<double> kkt_residuals(const SvmModel &model, std::span<const double> alphas,
                                  std::span<const Point2> points, std::span<const int> labels);

/// Row-major matrix of decision values at cell centres.
struct DecisionGrid {
    std::pair<double, double> x_range;
    std::pair<double, double> y_range;
    std::size_t resolution;
    /// values[row * resolution + col]; row indexes y, col indexes x.
    std::vector<double> values;

    [[nodiscard]] double at(std::size_t row, std::size_t col) const { return values[row * resolution + col]; }
    [[nodiscard]] double center_x(std::size_t col) const;
    [[nodiscard]] double center_y(std::size_t row) const;
};

/// Throws ErrorCode::bad_range unless lo < hi on both axes and resolution >= 2.
DecisionGrid decision_grid(const SvmModel &model, std::pair<double, double> x_range, std::pair<double, double> y_range,
                           std::size_t resolution);

}  // namespace dualtest
