#pragma once

#include "dualtest/empirical.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace dualtest {

/// Closed interval of test-statistic values for which a null hypothesis is kept.
class AcceptanceRegion {
  public:
    /// Throws when either bound is non-finite or lower > upper.
    AcceptanceRegion(double lower, double upper);

    [[nodiscard]] double lower() const noexcept { return lower_; }
    [[nodiscard]] double upper() const noexcept { return upper_; }
    [[nodiscard]] double width() const noexcept { return upper_ - lower_; }
    [[nodiscard]] bool contains(double t) const noexcept { return lower_ <= t && t <= upper_; }

    friend bool operator==(const AcceptanceRegion &, const AcceptanceRegion &) = default;

  private:
    double lower_;
    double upper_;
};

/// Quantile points bounding the two acceptance regions. Test (1) is against
/// the label-0 class C1, test (2) against the label-1 class C2.
struct TestConfig {
    double class1_lower_p;
    double class1_upper_p;
    double class2_lower_p;
    double class2_upper_p;

    /// Both tests at the common significance level alpha: points (alpha, 1 - alpha).
    static TestConfig symmetric(double alpha);

    /// Throws ErrorCode::invalid_argument unless every point lies in (0, 1)
    /// and lower < upper within each class.
    void validate() const;

    friend bool operator==(const TestConfig &, const TestConfig &) = default;
};

enum class Decision {
    class1,
    class2,
    /// Both nulls kept: t lies where the class distributions overlap (type I uncertainty).
    uncertain_overlap,
    /// Both nulls rejected: t is unlike either training distribution (type II uncertainty).
    uncertain_outlier,
};

std::string_view to_string(Decision d) noexcept;
inline bool is_abstention(Decision d) noexcept {
    return d == Decision::uncertain_overlap || d == Decision::uncertain_outlier;
}

/// The four-way rule on membership in the two acceptance regions.
Decision decide(double t, const AcceptanceRegion &region1, const AcceptanceRegion &region2);

class CalibratedTester {
  public:
    CalibratedTester(AcceptanceRegion region1, AcceptanceRegion region2, TestConfig config);

    /// region_i = [quantile(dist_i, lower_p_i), quantile(dist_i, upper_p_i)].
    static CalibratedTester calibrate(const EmpiricalDistribution &dist1, const EmpiricalDistribution &dist2,
                                      const TestConfig &config);

    [[nodiscard]] const AcceptanceRegion &region1() const noexcept { return region1_; }
    [[nodiscard]] const AcceptanceRegion &region2() const noexcept { return region2_; }
    [[nodiscard]] const TestConfig &config() const noexcept { return config_; }

    /// Throws ErrorCode::non_finite_value for NaN or infinite t.
    [[nodiscard]] Decision decide(double t) const;

    /// Elementwise decide; a non-finite entry throws with its index.
    [[nodiscard]] std::vector<Decision> decide_batch(std::span<const double> ts) const;

  private:
    AcceptanceRegion region1_;
    AcceptanceRegion region2_;
    TestConfig config_;
};

/// Fraction of `values` falling outside `region`.
double rejection_rate(const AcceptanceRegion &region, std::span<const double> values);

}  // namespace dualtest
