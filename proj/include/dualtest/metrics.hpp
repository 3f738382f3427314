#pragma once

#include "dualtest/testing.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace dualtest {

/// Selective-classification summary. Confusion counts and ratios cover the
/// decided (non-abstained) items only; a ratio with a zero denominator is
/// std::nullopt.
struct SelectiveReport {
    std::size_t total = 0;
    std::size_t abstained = 0;
    std::size_t abstained_overlap = 0;
    std::size_t abstained_outlier = 0;
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;
    double coverage = 0.0;
    std::optional<double> accuracy;
    std::optional<double> recall;
    std::optional<double> precision;
    std::optional<double> specificity;
    std::optional<double> f1;

    [[nodiscard]] std::size_t decided() const noexcept { return total - abstained; }
};

/// Label predicted by a definite decision: class1 -> 0, class2 -> 1.
int predicted_label(Decision d);

/// Throws ErrorCode::length_mismatch on unequal or empty inputs and
/// ErrorCode::invalid_argument for labels outside {0, 1}.
SelectiveReport evaluate(std::span<const Decision> decisions, std::span<const int> truths, int positive_class);

}  // namespace dualtest
