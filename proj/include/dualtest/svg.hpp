#pragma once

#include "dualtest/svm.hpp"
#include "dualtest/testing.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dualtest::svg {

/// Affine map from data coordinates onto a pixel interval.
struct AxisMap {
    double lo;
    double hi;
    double px_lo;
    double px_hi;

    [[nodiscard]] double operator()(double v) const { return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo); }
    [[nodiscard]] double inverse(double px) const { return lo + (px - px_lo) / (px_hi - px_lo) * (hi - lo); }
};

struct ThresholdPanel {
    std::string title;
    AcceptanceRegion region1;
    AcceptanceRegion region2;
};

enum class LineStyle { solid, dashed };

struct ThresholdLine {
    double value;
    /// 1 or 2: the acceptance region the bound belongs to.
    int region;
    bool is_upper;
    LineStyle style;
};

/// The four region bounds, styled the way the histograms draw them: bounds of
/// the overlap interval (type I uncertainty) solid, the rest dashed.
std::vector<ThresholdLine> threshold_lines(const AcceptanceRegion &region1, const AcceptanceRegion &region2);

/// Stacked panels, each overlaying both class histograms on a shared axis and
/// marking one experiment's thresholds. Every threshold <line> carries its
/// exact value in `data-value`; each panel <g> carries its AxisMap in
/// `data-lo`, `data-hi`, `data-px-lo`, `data-px-hi`.
std::string histogram_figure(std::span<const double> class1, std::span<const double> class2, std::size_t bins,
                             std::span<const ThresholdPanel> panels);

/// Grid cells coloured by decision (runs of equal cells merged per row) with
/// the training points drawn on top: C1 (label +1) as dots, C2 as crosses.
/// `decisions` is row-major with row 0 at the lowest y.
std::string region_map(const std::string &title, std::span<const Decision> decisions, const DecisionGrid &grid,
                       std::span<const Point2> points, std::span<const int> labels);

/// CSS class used for the cells of each decision.
std::string_view css_class(Decision d) noexcept;

}  // namespace dualtest::svg
