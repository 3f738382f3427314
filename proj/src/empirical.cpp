#include "dualtest/empirical.hpp"

#include "dualtest/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace dualtest {

FeatureSample::FeatureSample(double value_, int label_) : value(value_), label(label_) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::non_finite_value, "feature value must be finite");
    }
    if (label != 0 && label != 1) {
        throw Error(ErrorCode::invalid_argument, fmt::format("label must be 0 or 1, got {}", label));
    }
}

ClassValues split_by_label(std::span<const FeatureSample> samples) {
    ClassValues out;
    for (const auto &s : samples) {
        (s.label == 0 ? out.class1 : out.class2).push_back(s.value);
    }
    return out;
}

EmpiricalDistribution EmpiricalDistribution::from_samples(std::span<const double> values, std::size_t min_count) {
    min_count = std::max<std::size_t>(min_count, 1);
    if (values.size() < min_count) {
        throw Error(ErrorCode::empty_or_too_small,
                    fmt::format("need at least {} samples, got {}", min_count, values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(ErrorCode::non_finite_value, "sample is not finite", i);
        }
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return EmpiricalDistribution(std::move(sorted));
}

std::size_t EmpiricalDistribution::quantile_rank(double p) const {
    if (!(p > 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::p_out_of_range, fmt::format("quantile level must lie in (0, 1], got {}", p));
    }
    const std::size_t n = sorted_.size();
    const double nd = static_cast<double>(n);
    // ceil(p*N) can be off by one when p*N rounds across an integer; settle on the
    // smallest rank k with k/N >= p, which is the same comparison ecdf() makes.
    auto k = static_cast<std::size_t>(std::clamp(std::ceil(p * nd), 1.0, nd));
    while (k > 1 && static_cast<double>(k - 1) / nd >= p) {
        --k;
    }
    while (k < n && static_cast<double>(k) / nd < p) {
        ++k;
    }
    return k;
}

double EmpiricalDistribution::quantile(double p) const { return sorted_[quantile_rank(p) - 1]; }

double EmpiricalDistribution::ecdf(double t) const {
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::non_finite_value, "ecdf argument must be finite");
    }
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::vector<HistogramBin> EmpiricalDistribution::histogram(std::size_t bins) const {
    double lo = min();
    double hi = max();
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    return histogram_over(sorted_, lo, hi, bins);
}

std::vector<HistogramBin> histogram_over(std::span<const double> values, double lo, double hi, std::size_t bins) {
    if (bins == 0) {
        throw Error(ErrorCode::zero_bins, "histogram needs at least one bin");
    }
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
        throw Error(ErrorCode::bad_range, fmt::format("histogram range [{}, {}] is invalid", lo, hi));
    }
    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<HistogramBin> out(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        out[i].lower = lo + static_cast<double>(i) * width;
        out[i].upper = (i + 1 == bins) ? hi : lo + static_cast<double>(i + 1) * width;
        out[i].count = 0;
    }
    for (double v : values) {
        const double pos = std::floor((v - lo) / width);
        const auto idx = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
        ++out[idx].count;
    }
    return out;
}

}  // namespace dualtest
