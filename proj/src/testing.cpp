#include "dualtest/testing.hpp"

#include "dualtest/error.hpp"

#include <cmath>
#include <fmt/format.h>

namespace dualtest {

AcceptanceRegion::AcceptanceRegion(double lower, double upper) : lower_(lower), upper_(upper) {
    if (!std::isfinite(lower) || !std::isfinite(upper)) {
        throw Error(ErrorCode::non_finite_value, "acceptance region bounds must be finite");
    }
    if (lower > upper) {
        throw Error(ErrorCode::invalid_argument, fmt::format("acceptance region [{}, {}] is empty", lower, upper));
    }
}

TestConfig TestConfig::symmetric(double alpha) {
    TestConfig config{alpha, 1.0 - alpha, alpha, 1.0 - alpha};
    config.validate();
    return config;
}

void TestConfig::validate() const {
    const auto check = [](double lo, double hi, const char *which) {
        const bool in_range = lo > 0.0 && lo < 1.0 && hi > 0.0 && hi < 1.0;
        if (!in_range || !(lo < hi)) {
            throw Error(ErrorCode::invalid_argument,
                        fmt::format("{} quantile points ({}, {}) must satisfy 0 < lower < upper < 1", which, lo, hi));
        }
    };
    check(class1_lower_p, class1_upper_p, "test 1");
    check(class2_lower_p, class2_upper_p, "test 2");
}

std::string_view to_string(Decision d) noexcept {
    switch (d) {
        case Decision::class1: return "class1";
        case Decision::class2: return "class2";
        case Decision::uncertain_overlap: return "uncertain_overlap";
        case Decision::uncertain_outlier: return "uncertain_outlier";
    }
    return "unknown";
}

Decision decide(double t, const AcceptanceRegion &region1, const AcceptanceRegion &region2) {
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::non_finite_value, "test statistic must be finite");
    }
    const bool in1 = region1.contains(t);
    const bool in2 = region2.contains(t);
    if (in1 && !in2) {
        return Decision::class1;
    }
    if (!in1 && in2) {
        return Decision::class2;
    }
    return in1 ? Decision::uncertain_overlap : Decision::uncertain_outlier;
}

CalibratedTester::CalibratedTester(AcceptanceRegion region1, AcceptanceRegion region2, TestConfig config)
    : region1_(region1), region2_(region2), config_(config) {
    config_.validate();
}

CalibratedTester CalibratedTester::calibrate(const EmpiricalDistribution &dist1, const EmpiricalDistribution &dist2,
                                             const TestConfig &config) {
    config.validate();
    AcceptanceRegion r1(dist1.quantile(config.class1_lower_p), dist1.quantile(config.class1_upper_p));
    AcceptanceRegion r2(dist2.quantile(config.class2_lower_p), dist2.quantile(config.class2_upper_p));
    return CalibratedTester(r1, r2, config);
}

Decision CalibratedTester::decide(double t) const { return dualtest::decide(t, region1_, region2_); }

std::vector<Decision> CalibratedTester::decide_batch(std::span<const double> ts) const {
    std::vector<Decision> out;
    out.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!std::isfinite(ts[i])) {
            throw Error(ErrorCode::non_finite_value, "test statistic must be finite", i);
        }
        out.push_back(dualtest::decide(ts[i], region1_, region2_));
    }
    return out;
}

double rejection_rate(const AcceptanceRegion &region, std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    std::size_t rejected = 0;
    for (double v : values) {
        rejected += region.contains(v) ? 0 : 1;
    }
    return static_cast<double>(rejected) / static_cast<double>(values.size());
}

}  // namespace dualtest
