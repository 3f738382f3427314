#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dualtest {

/// A labeled test-statistic value. Label 0 is class C1, label 1 is class C2.
struct FeatureSample {
    double value;
    int label;

    /// Validates finiteness of `value` and that `label` is 0 or 1.
    FeatureSample(double value, int label);
};

/// Splits labeled samples into the label-0 and label-1 value sequences, preserving order.
struct ClassValues {
    std::vector<double> class1;
    std::vector<double> class2;
};
ClassValues split_by_label(std::span<const FeatureSample> samples);

struct HistogramBin {
    double lower;
    double upper;
    std::size_t count;
};

/// Empirical distribution of one class's feature values.
///
/// Holds the sorted samples; quantiles are lower order statistics
/// (no interpolation) and the ECDF counts samples <= t.
class EmpiricalDistribution {
  public:
    /// Throws ErrorCode::empty_or_too_small when values.size() < min_count
    /// and ErrorCode::non_finite_value on NaN or infinities.
    static EmpiricalDistribution from_samples(std::span<const double> values, std::size_t min_count = 1);

    [[nodiscard]] std::span<const double> sorted_values() const noexcept { return sorted_; }
    [[nodiscard]] std::size_t count() const noexcept { return sorted_.size(); }
    [[nodiscard]] double min() const noexcept { return sorted_.front(); }
    [[nodiscard]] double max() const noexcept { return sorted_.back(); }

    /// Smallest sample t with ecdf(t) >= p, i.e. the ceil(p*N)-th order statistic.
    /// Requires 0 < p <= 1.
    [[nodiscard]] double quantile(double p) const;

    /// 1-based rank of the order statistic returned by quantile(p).
    [[nodiscard]] std::size_t quantile_rank(double p) const;

    /// Fraction of samples <= t.
    [[nodiscard]] double ecdf(double t) const;

    /// Equal-width bins over [min, max], last bin closed on the right.
    /// An all-equal sample is widened to [v - 0.5, v + 0.5].
    [[nodiscard]] std::vector<HistogramBin> histogram(std::size_t bins) const;

  private:
    explicit EmpiricalDistribution(std::vector<double> sorted) : sorted_(std::move(sorted)) {}

    std::vector<double> sorted_;
};

/// Histogram over an explicit range; values outside [lo, hi] are clamped into the end bins.
std::vector<HistogramBin> histogram_over(std::span<const double> values, double lo, double hi, std::size_t bins);

}  // namespace dualtest
