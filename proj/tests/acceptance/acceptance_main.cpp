// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "dualtest/cli.hpp"
#include "dualtest/datasets.hpp"
#include "dualtest/empirical.hpp"
#include "dualtest/io.hpp"
#include "dualtest/metrics.hpp"
#include "dualtest/neural.hpp"
#include "dualtest/random.hpp"
#include "dualtest/svm.hpp"
#include "dualtest/testing.hpp"
#include "oracles.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace dualtest;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    std::optional<double> time_limit;
    std::function<Outcome()> check;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CalibratedTester calibrate_on(std::span<const double> c1, std::span<const double> c2, const TestConfig &config) {
    return CalibratedTester::calibrate(EmpiricalDistribution::from_samples(c1), EmpiricalDistribution::from_samples(c2),
                                       config);
}

std::vector<double> class_values(const ScoreData &data, int label) {
    std::vector<double> out;
    for (std::size_t i = 0; i < data.scores.size(); ++i) {
        if (data.labels[i] == label) out.push_back(data.scores[i]);
    }
    return out;
}

// ---------------------------------------------------------------- 1

Outcome decision_totality() {
    Rng rng(1);
    std::size_t cases = 0, bad = 0;
    const auto check = [&](double t, const AcceptanceRegion &r1, const AcceptanceRegion &r2) {
        const bool in1 = r1.lower() <= t && t <= r1.upper();
        const bool in2 = r2.lower() <= t && t <= r2.upper();
        const Decision expected = in1 && in2   ? Decision::uncertain_overlap
                                  : in1        ? Decision::class1
                                  : in2        ? Decision::class2
                                               : Decision::uncertain_outlier;
        const Decision got = decide(t, r1, r2);
        const int hits = (got == Decision::class1) + (got == Decision::class2) +
                         (got == Decision::uncertain_overlap) + (got == Decision::uncertain_outlier);
        ++cases;
        bad += hits != 1 || got != expected;
    };
    // Each membership combination explicitly.
    const AcceptanceRegion r1(-2.0, 1.0), r2(0.0, 3.0);
    for (double t : {-1.0, 2.0, 0.5, -5.0, 5.0, -2.0, 1.0, 0.0, 3.0}) {
        check(t, r1, r2);
    }
    for (int i = 0; i < 200000; ++i) {
        double a = rng.uniform(-5, 5), b = rng.uniform(-5, 5), c = rng.uniform(-5, 5), d = rng.uniform(-5, 5);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        const AcceptanceRegion ra(a, b), rb(c, d);
        double t = rng.uniform(-6, 6);
        switch (rng.below(6)) {
            case 0: t = a; break;
            case 1: t = b; break;
            case 2: t = c; break;
            case 3: t = d; break;
            default: break;
        }
        check(t, ra, rb);
    }
    return {bad == 0, fmt::format("{} cases, {} not mapped to the single expected decision", cases, bad)};
}

// ---------------------------------------------------------------- 2

Outcome quantile_oracle() {
    Rng rng(2);
    std::size_t mismatches = 0;
    constexpr int sets = 10000;
    for (int s = 0; s < sets; ++s) {
        const std::size_t n = 1 + rng.below(500);
        std::vector<double> values(n);
        const bool ties = rng.below(4) == 0;
        for (auto &v : values) {
            v = ties ? static_cast<double>(rng.below(10)) : rng.normal(0.0, 1.0 + 10.0 * rng.uniform());
        }
        const auto dist = EmpiricalDistribution::from_samples(values);
        for (int k = 0; k < 5; ++k) {
            const double p = rng.uniform_open_closed();
            mismatches += dist.quantile(p) != oracle::quantile(values, p);
        }
    }
    return {mismatches == 0, fmt::format("{} sample sets x 5 probabilities, {} mismatches", sets, mismatches)};
}

// ---------------------------------------------------------------- 3

Outcome region_nesting() {
    const auto data = generate_scores(ScoreMixtureSpec{});
    const auto c1 = class_values(data, 0), c2 = class_values(data, 1);
    std::vector<double> w1, w2;
    for (double alpha : {0.01, 0.025, 0.05}) {
        const auto t = calibrate_on(c1, c2, TestConfig::symmetric(alpha));
        w1.push_back(t.region1().width());
        w2.push_back(t.region2().width());
    }
    int violations = 0;
    for (std::size_t i = 1; i < w1.size(); ++i) {
        violations += w1[i] > w1[i - 1];
        violations += w2[i] > w2[i - 1];
    }
    return {violations == 0, fmt::format("widths class1 {:.4f} {:.4f} {:.4f}, class2 {:.4f} {:.4f} {:.4f}, {} violations",
                                         w1[0], w1[1], w1[2], w2[0], w2[1], w2[2], violations)};
}

// ---------------------------------------------------------------- 4

Outcome non_monotone_coverage() {
    // 2% of each class sits in a far tail beyond the other class's mean.
    ScoreMixtureSpec spec;
    spec.outlier_fraction = 0.02;
    spec.outlier_shift = -8.0;
    spec.seed = 4;
    const auto data = generate_scores(spec);
    const auto c1 = class_values(data, 0), c2 = class_values(data, 1);
    std::vector<double> coverage;
    for (double alpha : {0.01, 0.025, 0.05}) {
        const auto t = calibrate_on(c1, c2, TestConfig::symmetric(alpha));
        coverage.push_back(evaluate(t.decide_batch(data.scores), data.labels, 1).coverage);
    }
    const bool nonincreasing = coverage[1] <= coverage[0] && coverage[2] <= coverage[1];
    const bool nondecreasing = coverage[1] >= coverage[0] && coverage[2] >= coverage[1];
    return {!nonincreasing && !nondecreasing,
            fmt::format("coverage at alpha 1.0/2.5/5.0%: {:.4f} {:.4f} {:.4f}", coverage[0], coverage[1], coverage[2])};
}

// ---------------------------------------------------------------- 5

Outcome self_consistency() {
    int violations = 0;
    double worst = 0.0;
    const double alphas[] = {0.01, 0.025, 0.05};
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng(500 + trial);
        const std::size_t n1 = 1000 + rng.below(4001), n2 = 1000 + rng.below(4001);
        const double alpha = alphas[trial % 3];
        std::vector<double> c1(n1), c2(n2);
        for (auto &v : c1) v = rng.normal(-1.0, 1.0 + rng.uniform());
        for (auto &v : c2) v = rng.normal(1.0, 0.5);
        const auto t = calibrate_on(c1, c2, TestConfig::symmetric(alpha));
        for (const auto &[region, values] : {std::pair{t.region1(), &c1}, std::pair{t.region2(), &c2}}) {
            const double n = static_cast<double>(values->size());
            const double rate = rejection_rate(region, *values);
            const double off = std::abs(rate - 2.0 * alpha) - 2.0 / n;
            worst = std::max(worst, std::abs(rate - 2.0 * alpha) * n);
            violations += off > 0.0;
        }
    }
    return {violations == 0,
            fmt::format("100 trials, both tests, {} violations, max |rate - 2 alpha| * N = {:.3f}", violations, worst)};
}

// ---------------------------------------------------------------- 6 and 7 share one spiral run

const cli::SpiralRun &spiral_run() {
    static const cli::SpiralRun run = cli::run_spiral(cli::SpiralOptions{});
    return run;
}

Outcome svm_correctness() {
    const auto &run = spiral_run();
    const auto residuals = kkt_residuals(run.fit.model, run.fit.alphas, run.data.points, run.data.labels);
    const double max_residual = *std::max_element(residuals.begin(), residuals.end());
    const double tolerance = SmoSettings{}.tolerance;

    Rng rng(6);
    std::size_t probes = 0, disagreements = 0, unsolved = 0;
    for (int problem = 0; problem < 50; ++problem) {
        const std::size_t n = 2 + rng.below(7);
        std::vector<Point2> pts(n);
        std::vector<std::pair<double, double>> raw(n);
        std::vector<int> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            pts[i] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
            raw[i] = {pts[i].x, pts[i].y};
            y[i] = i == 0 ? 1 : i == 1 ? -1 : (rng.below(2) == 0 ? 1 : -1);
        }
        const double gamma = rng.uniform(0.5, 4.0);
        const double c = rng.below(2) == 0 ? 1.0 : 10.0;
        const KernelParams kernel(gamma);
        std::vector<std::vector<double>> gram(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) gram[i][j] = kernel(pts[i], pts[j]);
        }
        const auto exact = oracle::svm_dual_brute_force(gram, y, c);
        if (!exact) {
            ++unsolved;
            continue;
        }
        SmoSettings settings;
        settings.c = c;
        settings.tolerance = 1e-8;
        settings.max_passes = 100000;
        const auto fit = train_svm(pts, y, kernel, settings);
        std::vector<Point2> queries = pts;
        for (int q = 0; q < 40; ++q) queries.push_back({rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)});
        for (const auto &x : queries) {
            const double g_exact = oracle::rbf_decision(raw, y, exact->alpha, exact->bias, gamma, x.x, x.y);
            const double g = fit.model.decision_function(x);
            ++probes;
            if ((g > 0.0) != (g_exact > 0.0)) {
                ++disagreements;
            }
        }
    }
    const bool pass = max_residual <= tolerance && disagreements == 0 && unsolved == 0;
    return {pass, fmt::format("spiral max KKT residual {:.2e} (tol {:.0e}, converged {}); 50 dense problems, {} probes, "
                              "{} sign disagreements, {} unsolved",
                              max_residual, tolerance, run.fit.converged, probes, disagreements, unsolved)};
}

Outcome spiral_qualitative() {
    const auto &run = spiral_run();
    const auto &grid = run.grid;
    const std::size_t res = grid.resolution;

    // (a)
    const std::set<Decision> baseline(run.baseline.begin(), run.baseline.end());
    const bool a = baseline.size() == 2;

    // (b)
    const auto &cells = run.experiments.front().grid_decisions;
    double boundary_max = 0.0;
    for (std::size_t r = 0; r < res; ++r) {
        for (std::size_t c = 0; c < res; ++c) {
            const bool pos = grid.at(r, c) >= 0.0;
            const bool adjacent = (r > 0 && (grid.at(r - 1, c) >= 0.0) != pos) ||
                                  (r + 1 < res && (grid.at(r + 1, c) >= 0.0) != pos) ||
                                  (c > 0 && (grid.at(r, c - 1) >= 0.0) != pos) ||
                                  (c + 1 < res && (grid.at(r, c + 1) >= 0.0) != pos);
            if (adjacent) boundary_max = std::max(boundary_max, std::abs(grid.at(r, c)));
        }
    }
    std::size_t overlap = 0, beyond = 0;
    double overlap_max = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == Decision::uncertain_overlap) {
            ++overlap;
            overlap_max = std::max(overlap_max, std::abs(grid.values[i]));
            beyond += std::abs(grid.values[i]) > boundary_max;
        }
    }
    const bool b = overlap > 0 && beyond == 0;

    // (c)
    const std::pair<std::size_t, std::size_t> corners[] = {{0, 0}, {0, res - 1}, {res - 1, 0}, {res - 1, res - 1}};
    int outlier_corners = 0;
    double nearest = std::numeric_limits<double>::infinity();
    std::string corner_decisions;
    for (const auto &[r, c] : corners) {
        const Point2 centre{grid.center_x(c), grid.center_y(r)};
        for (const auto &p : run.data.points) nearest = std::min(nearest, std::hypot(p.x - centre.x, p.y - centre.y));
        const Decision d = cells[r * res + c];
        outlier_corners += d == Decision::uncertain_outlier;
        corner_decisions += fmt::format("{}{}(g={:.3f})", corner_decisions.empty() ? "" : " ", to_string(d),
                                        grid.at(r, c));
    }
    const bool corner_ok = outlier_corners == 4;

    const auto &r1 = run.experiments.front().tester.region1();
    const auto &r2 = run.experiments.front().tester.region2();
    return {a && b && corner_ok,
            fmt::format("(a) {} baseline decisions: {}; (b) {} overlap cells, max |g| {:.4f} vs boundary-adjacent max "
                        "{:.4f}, {} beyond: {}; (c) corners {} [nearest data {:.3f}, overlap interval [{:.4f}, {:.4f}], "
                        "bias {:.4f}]: {}",
                        baseline.size(), a ? "ok" : "FAIL", overlap, overlap_max, boundary_max, beyond,
                        b ? "ok" : "FAIL", corner_decisions, nearest, std::max(r1.lower(), r2.lower()),
                        std::min(r1.upper(), r2.upper()), run.fit.model.bias(), corner_ok ? "ok" : "FAIL")};
}

// ---------------------------------------------------------------- 8

Outcome weighted_loss() {
    Rng rng(8);
    constexpr double h = 1e-5;
    double worst = 0.0;
    for (int instance = 0; instance < 100; ++instance) {
        const std::size_t rows = 4 + rng.below(30), cols = 1 + rng.below(5);
        FeatureMatrix x(rows, cols);
        std::vector<int> y(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) x(r, c) = rng.normal();
            y[r] = r < 2 ? static_cast<int>(r) : static_cast<int>(rng.below(2));
        }
        const auto spec = WeightedBceSpec::from_labels(y);
        LogisticModel m{std::vector<double>(cols), rng.normal()};
        for (auto &w : m.weights) w = rng.normal();
        const auto g = logistic_gradient(m, x, y, spec);
        for (std::size_t k = 0; k <= cols; ++k) {
            double &param = k < cols ? m.weights[k] : m.bias;
            const double saved = param;
            param = saved + h;
            const double up = logistic_loss(m, x, y, spec);
            param = saved - h;
            const double down = logistic_loss(m, x, y, spec);
            param = saved;
            const double numeric = (up - down) / (2.0 * h);
            const double analytic = k < cols ? g.weights[k] : g.bias;
            worst = std::max(worst, std::abs(analytic - numeric) /
                                        std::max(1.0, std::max(std::abs(analytic), std::abs(numeric))));
        }
    }
    bool balanced = true;
    for (std::size_t n = 1; n <= 500; ++n) {
        const WeightedBceSpec spec(n, n);
        balanced = balanced && sample_weight(0, spec) == 0.5 && sample_weight(1, spec) == 0.5;
    }
    const std::vector<int> labels{0, 0, 0, 1};
    const std::vector<double> half(4, 0.5);
    const double loss = weighted_bce_loss(half, labels, WeightedBceSpec::from_labels(labels));
    const double closed = 1.5 * std::numbers::ln2;
    const bool pass = worst <= 1e-5 && balanced && std::abs(loss - closed) <= 1e-12;
    return {pass, fmt::format("max relative gradient error {:.2e}; balanced weights exactly 1/2: {}; "
                              "[0,0,0,1] at 0.5 -> {:.15f} vs 1.5 ln 2 = {:.15f}",
                              worst, balanced, loss, closed)};
}

// ---------------------------------------------------------------- 9

Outcome metrics_oracle() {
    Rng rng(9);
    std::size_t mismatches = 0;
    for (int round = 0; round < 10; ++round) {
        const std::size_t n = 10000;
        std::vector<Decision> decisions(n);
        std::vector<int> truths(n), preds(n);
        for (std::size_t i = 0; i < n; ++i) {
            decisions[i] = static_cast<Decision>(rng.below(4));
            truths[i] = static_cast<int>(rng.below(2));
            preds[i] = is_abstention(decisions[i]) ? -1 : predicted_label(decisions[i]);
        }
        const int positive = round % 2;
        const auto r = evaluate(decisions, truths, positive);
        const auto c = oracle::confusion(preds, truths, positive);
        mismatches += r.tp != c.tp || r.fp != c.fp || r.tn != c.tn || r.fn != c.fn || r.abstained != c.abstained;
        const double decided = static_cast<double>(c.tp + c.fp + c.tn + c.fn);
        mismatches += std::abs(r.coverage - decided / static_cast<double>(n)) > 1e-12;
        mismatches += std::abs(*r.accuracy - static_cast<double>(c.tp + c.tn) / decided) > 1e-12;
    }
    using D = Decision;
    const std::vector<Decision> decisions{D::class2, D::class2, D::class2, D::class1, D::class1, D::class1,
                                          D::class1, D::class1, D::class2, D::class1, D::uncertain_overlap,
                                          D::uncertain_outlier};
    const std::vector<int> truths{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0};
    const auto r = evaluate(decisions, truths, 1);
    const bool example = std::abs(r.coverage - 10.0 / 12.0) <= 1e-12 && r.f1 && std::abs(*r.f1 - 0.75) <= 1e-12;
    return {mismatches == 0 && example,
            fmt::format("10 x 1e4 random items, {} count or ratio mismatches; 12-item example coverage {:.15f}, f1 {:.15f}", mismatches,
                        r.coverage, r.f1.value_or(-1.0))};
}

// ---------------------------------------------------------------- 10

Outcome selective_beats_sign_rule() {
    const auto data = generate_scores(ScoreMixtureSpec{});
    const auto c1 = class_values(data, 0), c2 = class_values(data, 1);
    std::size_t sign_correct = 0;
    for (std::size_t i = 0; i < data.scores.size(); ++i) {
        sign_correct += (data.scores[i] >= 0.0 ? 1 : 0) == data.labels[i];
    }
    const double sign_accuracy = static_cast<double>(sign_correct) / static_cast<double>(data.scores.size());
    bool pass = true;
    std::string rows;
    for (double alpha : {0.01, 0.025, 0.05}) {
        const auto t = calibrate_on(c1, c2, TestConfig::symmetric(alpha));
        const auto r = evaluate(t.decide_batch(data.scores), data.labels, 1);
        pass = pass && r.accuracy && *r.accuracy >= sign_accuracy;
        rows += fmt::format(" alpha {:.1f}%: accuracy {:.5f} coverage {:.4f};", 100.0 * alpha, r.accuracy.value_or(-1.0),
                            r.coverage);
    }
    return {pass, fmt::format("sign rule accuracy {:.5f};{}", sign_accuracy, rows)};
}

// ---------------------------------------------------------------- 11

Outcome persistence() {
    const auto data = generate_scores(ScoreMixtureSpec{});
    std::vector<ScoreRecord> records;
    for (std::size_t i = 0; i < data.scores.size(); ++i) records.push_back({data.scores[i], data.labels[i]});
    const auto csv = format_scores(records);
    const bool csv_ok = format_scores(parse_scores(csv)) == csv && parse_scores(csv) == records;

    const auto c1 = class_values(data, 0), c2 = class_values(data, 1);
    const auto tester = calibrate_on(c1, c2, TestConfig{0.05, 0.975, 0.025, 0.95});
    const auto &run = spiral_run();
    std::size_t snapshots_ok = 0;
    std::size_t probe_mismatches = 0;
    const std::vector<CalibrationSnapshot> snaps{
        make_snapshot(tester, "acceptance mixture", c1.size(), c2.size()),
        make_snapshot(run.experiments.back().tester, "acceptance spiral", run.class1_scores.size(),
                      run.class2_scores.size(), run.fit.model)};
    Rng rng(11);
    for (const auto &snap : snaps) {
        const auto text = format_snapshot(snap);
        const auto back = parse_snapshot(text);
        snapshots_ok += back == snap && format_snapshot(back) == text;
        const auto &r1 = snap.region1;
        const auto &r2 = snap.region2;
        for (int i = 0; i < 1000; ++i) {
            double t = rng.uniform(std::min(r1.lower(), r2.lower()) - 1.0, std::max(r1.upper(), r2.upper()) + 1.0);
            if (i < 4) t = i == 0 ? r1.lower() : i == 1 ? r1.upper() : i == 2 ? r2.lower() : r2.upper();
            probe_mismatches += back.tester().decide(t) != snap.tester().decide(t);
        }
    }
    const bool pass = csv_ok && snapshots_ok == snaps.size() && probe_mismatches == 0;
    return {pass, fmt::format("score CSV ({} rows) byte-exact: {}; {}/{} snapshots byte-exact; {} decision mismatches "
                              "over 2 x 1000 probes",
                              records.size(), csv_ok, snapshots_ok, snaps.size(), probe_mismatches)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "decision rule totality", 1.0, decision_totality},
        {"AC2", "quantile equals order-statistic oracle", 10.0, quantile_oracle},
        {"AC3", "acceptance widths nonincreasing in alpha", std::nullopt, region_nesting},
        {"AC4", "heavy-tailed mixture gives non-monotone coverage", std::nullopt, non_monotone_coverage},
        {"AC5", "training self-rejection within 2 alpha +- 2/N", std::nullopt, self_consistency},
        {"AC6", "SMO KKT residuals and brute-force dual agreement", 30.0, svm_correctness},
        {"AC7", "spiral region maps", std::nullopt, spiral_qualitative},
        {"AC8", "weighted cross-entropy", std::nullopt, weighted_loss},
        {"AC9", "selective metrics oracle", std::nullopt, metrics_oracle},
        {"AC10", "selective accuracy at least sign-rule accuracy", std::nullopt, selective_beats_sign_rule},
        {"AC11", "snapshot and CSV persistence", std::nullopt, persistence},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = seconds_since(start);
        std::string timing = fmt::format("{:.2f}s", elapsed);
        if (c.time_limit) {
            timing += fmt::format(" (limit {:.0f}s)", *c.time_limit);
            if (elapsed >= *c.time_limit) {
                o.pass = false;
                o.detail += "; over time limit";
            }
        }
        failures += !o.pass;
        fmt::print("{:<5} {} {} [{}] {}\n", c.id, o.pass ? "PASS" : "FAIL", c.title, timing, o.detail);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
