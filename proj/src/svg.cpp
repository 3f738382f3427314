#include "dualtest/svg.hpp"

#include "dualtest/empirical.hpp"
#include "dualtest/error.hpp"
#include "dualtest/io.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace dualtest::svg {

namespace {

constexpr double panel_width = 720.0;
constexpr double panel_height = 240.0;
constexpr double margin_left = 50.0;
constexpr double margin_right = 20.0;
constexpr double margin_top = 30.0;
constexpr double margin_bottom = 30.0;

std::string px(double v) { return fmt::format("{:.3f}", v); }

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

constexpr std::string_view style_block =
    "<style>"
    ".class1{fill:#9ecae1}.class2{fill:#fdae6b}"
    ".uncertain_overlap{fill:#f7e463}.uncertain_outlier{fill:#8c8c8c}"
    ".bar1{fill:#3182bd;fill-opacity:0.55}.bar2{fill:#e6550d;fill-opacity:0.55}"
    ".threshold{stroke:#000;stroke-width:1.5}.dashed{stroke-dasharray:6 4}"
    ".dot{fill:#08519c}.cross{stroke:#a63603;stroke-width:1.2}"
    "text{font-family:sans-serif;font-size:12px}"
    "</style>\n";

}  // namespace

std::string_view css_class(Decision d) noexcept { return to_string(d); }

std::vector<ThresholdLine> threshold_lines(const AcceptanceRegion &region1, const AcceptanceRegion &region2) {
    const double inner_lo = std::max(region1.lower(), region2.lower());
    const double inner_hi = std::min(region1.upper(), region2.upper());
    const bool overlap = inner_lo <= inner_hi;
    std::vector<ThresholdLine> out;
    const auto add = [&](double v, int region, bool upper) {
        const bool inner = upper ? v == inner_hi : v == inner_lo;
        out.push_back({v, region, upper, overlap && inner ? LineStyle::solid : LineStyle::dashed});
    };
    add(region1.lower(), 1, false);
    add(region1.upper(), 1, true);
    add(region2.lower(), 2, false);
    add(region2.upper(), 2, true);
    return out;
}

std::string histogram_figure(std::span<const double> class1, std::span<const double> class2, std::size_t bins,
                             std::span<const ThresholdPanel> panels) {
    if (class1.empty() || class2.empty()) {
        throw Error(ErrorCode::empty_or_too_small, "histogram figure needs values for both classes");
    }
    double lo = std::min(*std::min_element(class1.begin(), class1.end()),
                         *std::min_element(class2.begin(), class2.end()));
    double hi = std::max(*std::max_element(class1.begin(), class1.end()),
                         *std::max_element(class2.begin(), class2.end()));
    for (const auto &p : panels) {
        lo = std::min({lo, p.region1.lower(), p.region2.lower()});
        hi = std::max({hi, p.region1.upper(), p.region2.upper()});
    }
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
    const auto h1 = histogram_over(class1, lo, hi, bins);
    const auto h2 = histogram_over(class2, lo, hi, bins);
    std::size_t peak = 1;
    for (std::size_t b = 0; b < bins; ++b) {
        peak = std::max({peak, h1[b].count, h2[b].count});
    }

    const std::size_t n_panels = std::max<std::size_t>(panels.size(), 1);
    const double total_height = panel_height * static_cast<double>(n_panels);
    std::string out = fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        px(panel_width), px(total_height), px(panel_width), px(total_height));
    out += style_block;

    for (std::size_t k = 0; k < n_panels; ++k) {
        const double top = panel_height * static_cast<double>(k);
        const AxisMap x_map{lo, hi, margin_left, panel_width - margin_right};
        const double base = top + panel_height - margin_bottom;
        const double bar_scale = (panel_height - margin_top - margin_bottom) / static_cast<double>(peak);
        out += fmt::format("<g class=\"panel\" data-lo=\"{}\" data-hi=\"{}\" data-px-lo=\"{}\" data-px-hi=\"{}\">\n",
                           format_double(x_map.lo), format_double(x_map.hi), format_double(x_map.px_lo),
                           format_double(x_map.px_hi));
        const std::string title = k < panels.size() ? panels[k].title : std::string("test statistic");
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", px(margin_left), px(top + 18.0), xml_escape(title));
        for (const auto *hist : {&h1, &h2}) {
            const char *cls = hist == &h1 ? "bar1" : "bar2";
            for (const auto &bin : *hist) {
                if (bin.count == 0) {
                    continue;
                }
                const double x0 = x_map(bin.lower);
                const double h = static_cast<double>(bin.count) * bar_scale;
                out += fmt::format("<rect class=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>\n", cls, px(x0),
                                   px(base - h), px(x_map(bin.upper) - x0), px(h));
            }
        }
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000\"/>\n", px(x_map.px_lo),
                           px(base), px(x_map.px_hi), px(base));
        for (double tick : {lo + pad, 0.5 * (lo + hi), hi - pad}) {
            out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{:.3g}</text>\n", px(x_map(tick)),
                               px(base + 16.0), tick);
        }
        if (k < panels.size()) {
            for (const auto &line : threshold_lines(panels[k].region1, panels[k].region2)) {
                // The x coordinate keeps full precision so the threshold can be recovered from the figure.
                const std::string x = format_double(x_map(line.value));
                out += fmt::format(
                    "<line class=\"threshold {}\" data-value=\"{}\" data-region=\"{}\" data-bound=\"{}\" x1=\"{}\" "
                    "y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                    line.style == LineStyle::solid ? "solid" : "dashed", format_double(line.value), line.region,
                    line.is_upper ? "upper" : "lower", x, px(top + margin_top), x, px(base));
            }
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string region_map(const std::string &title, std::span<const Decision> decisions, const DecisionGrid &grid,
                       std::span<const Point2> points, std::span<const int> labels) {
    const std::size_t res = grid.resolution;
    if (decisions.size() != res * res) {
        throw Error(ErrorCode::dimension_mismatch, "decision count does not match the grid");
    }
    if (points.size() != labels.size()) {
        throw Error(ErrorCode::dimension_mismatch, "points and labels differ in length");
    }
    constexpr double size = 600.0;
    constexpr double margin = 30.0;
    const AxisMap x_map{grid.x_range.first, grid.x_range.second, margin, margin + size};
    // SVG y grows downwards.
    const AxisMap y_map{grid.y_range.first, grid.y_range.second, margin + size, margin};
    const double cell = size / static_cast<double>(res);

    std::string out = fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
        px(size + 2 * margin), px(size + 2 * margin + 24.0));
    out += style_block;
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", px(margin), px(20.0), xml_escape(title));
    out += "<g class=\"cells\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t row = 0; row < res; ++row) {
        const double y_top = margin + size - static_cast<double>(row + 1) * cell;
        std::size_t col = 0;
        while (col < res) {
            const Decision d = decisions[row * res + col];
            std::size_t end = col + 1;
            while (end < res && decisions[row * res + end] == d) {
                ++end;
            }
            out += fmt::format("<rect class=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>\n", css_class(d),
                               px(margin + static_cast<double>(col) * cell), px(y_top),
                               px(static_cast<double>(end - col) * cell), px(cell));
            col = end;
        }
    }
    out += "</g>\n<g class=\"points\">\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double x = x_map(points[i].x);
        const double y = y_map(points[i].y);
        if (labels[i] > 0) {
            out += fmt::format("<circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"2\"/>\n", px(x), px(y));
        } else {
            out += fmt::format("<path class=\"cross\" d=\"M{} {}L{} {}M{} {}L{} {}\"/>\n", px(x - 2.5), px(y - 2.5),
                               px(x + 2.5), px(y + 2.5), px(x - 2.5), px(y + 2.5), px(x + 2.5), px(y - 2.5));
        }
    }
    out += "</g>\n";
    const double legend_y = margin + size + 18.0;
    double lx = margin;
    for (Decision d : {Decision::class1, Decision::class2, Decision::uncertain_overlap, Decision::uncertain_outlier}) {
        out += fmt::format("<rect class=\"{}\" x=\"{}\" y=\"{}\" width=\"12\" height=\"12\"/>", css_class(d), px(lx),
                           px(legend_y - 10.0));
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", px(lx + 16.0), px(legend_y), to_string(d));
        lx += 150.0;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace dualtest::svg
