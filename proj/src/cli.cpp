#include "dualtest/cli.hpp"

#include "dualtest/empirical.hpp"
#include "dualtest/error.hpp"
#include "dualtest/io.hpp"
#include "dualtest/metrics.hpp"
#include "dualtest/svg.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fmt/format.h>
#include <optional>
#include <ostream>

namespace dualtest::cli {

namespace fs = std::filesystem;

namespace {

/// Bad flag values found after parsing; reported with exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuantileFlags {
    std::optional<double> alpha;
    std::optional<double> q1_lo;
    std::optional<double> q1_hi;
    std::optional<double> q2_lo;
    std::optional<double> q2_hi;

    [[nodiscard]] bool any_q() const { return q1_lo || q1_hi || q2_lo || q2_hi; }

    void add_to(CLI::App &app, bool with_alpha) {
        if (with_alpha) {
            app.add_option("--alpha", alpha, "Common significance level: quantile points (alpha, 1 - alpha)");
        }
        app.add_option("--q1-lo", q1_lo, "Lower quantile point of test 1 (class C1, label 0)");
        app.add_option("--q1-hi", q1_hi, "Upper quantile point of test 1");
        app.add_option("--q2-lo", q2_lo, "Lower quantile point of test 2 (class C2, label 1)");
        app.add_option("--q2-hi", q2_hi, "Upper quantile point of test 2");
    }

    /// Explicit points when all four q flags are given, else the symmetric
    /// config for `alpha` (or `fallback_alpha`).
    [[nodiscard]] TestConfig resolve(double fallback_alpha) const {
        if (any_q()) {
            if (alpha) {
                throw UsageError("--alpha cannot be combined with --q1-lo/--q1-hi/--q2-lo/--q2-hi");
            }
            if (!(q1_lo && q1_hi && q2_lo && q2_hi)) {
                throw UsageError("--q1-lo, --q1-hi, --q2-lo and --q2-hi must be given together");
            }
            TestConfig config{*q1_lo, *q1_hi, *q2_lo, *q2_hi};
            validate(config);
            return config;
        }
        return symmetric(alpha.value_or(fallback_alpha));
    }

    static TestConfig symmetric(double a) {
        TestConfig config{a, 1.0 - a, a, 1.0 - a};
        validate(config);
        return config;
    }

    static void validate(const TestConfig &config) {
        try {
            config.validate();
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
    }
};

std::string percent(double p) { return fmt::format("{:.1f}", 100.0 * p); }

std::string percent_or_na(const std::optional<double> &v) {
    return v ? fmt::format("{:.2f}", 100.0 * *v) : std::string("n/a");
}

std::string describe(const TestConfig &c) {
    return fmt::format("test1 [{}%, {}%], test2 [{}%, {}%]", percent(c.class1_lower_p), percent(c.class1_upper_p),
                       percent(c.class2_lower_p), percent(c.class2_upper_p));
}

std::optional<double> common_alpha(const TestConfig &c) {
    const bool symmetric = c.class1_lower_p == c.class2_lower_p && c.class1_upper_p == c.class2_upper_p &&
                           c.class1_upper_p == 1.0 - c.class1_lower_p;
    return symmetric ? std::optional<double>(c.class1_lower_p) : std::nullopt;
}

struct LabeledScores {
    std::vector<double> scores;
    std::vector<int> labels;
    std::vector<double> class1;
    std::vector<double> class2;
};

LabeledScores require_labeled(const std::vector<ScoreRecord> &records, std::string_view what) {
    if (records.empty()) {
        throw Error(ErrorCode::empty_or_too_small, fmt::format("{} file has no rows", what));
    }
    LabeledScores out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].label) {
            throw Error(ErrorCode::parse_error, fmt::format("{} rows must be labeled", what), i + 2);
        }
        out.scores.push_back(records[i].score);
        out.labels.push_back(*records[i].label);
        (*records[i].label == 0 ? out.class1 : out.class2).push_back(records[i].score);
    }
    return out;
}

CalibratedTester calibrate_from(const LabeledScores &train, const TestConfig &config, std::size_t min_count) {
    if (train.class1.empty() || train.class2.empty()) {
        throw Error(ErrorCode::single_class_input, "calibration needs labeled scores of both classes");
    }
    const auto d1 = EmpiricalDistribution::from_samples(train.class1, min_count);
    const auto d2 = EmpiricalDistribution::from_samples(train.class2, min_count);
    return CalibratedTester::calibrate(d1, d2, config);
}

void ensure_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorCode::file_not_found, fmt::format("cannot create directory '{}'", dir.string()));
    }
}

// ---------------------------------------------------------------- spiral

struct SpiralFlags {
    SpiralOptions options;
    std::string out_dir = "spiral_out";
    std::size_t bins = 30;
};

int cmd_spiral(const SpiralFlags &flags, std::ostream &out) {
    const auto &o = flags.options;
    const auto run_result = run_spiral(o);
    const fs::path dir(flags.out_dir);
    ensure_dir(dir);

    out << fmt::format("spiral: {} points ({} per class), turns {}, noise {}, seed {}\n", run_result.data.points.size(),
                       o.spiral.n_per_class, o.spiral.turns, o.spiral.noise_sigma, o.spiral.seed);
    out << fmt::format("svm: gamma {}, C {}, {} support vectors, bias {:.6f}, {} iterations, {}\n", o.gamma, o.smo.c,
                       run_result.fit.model.duals().size(), run_result.fit.model.bias(), run_result.fit.iterations,
                       run_result.fit.converged ? "converged" : "NOT converged");

    std::vector<ScoreRecord> train_records;
    for (std::size_t i = 0; i < run_result.train_scores.size(); ++i) {
        train_records.push_back({run_result.train_scores[i], run_result.data.labels[i] > 0 ? 0 : 1});
    }
    write_points(dir / "spiral_points.csv", run_result.data);
    write_scores(dir / "spiral_train_scores.csv", train_records);

    std::vector<svg::ThresholdPanel> panels;
    const auto &grid = run_result.grid;
    write_text_file(dir / "spiral_regions_svm.svg",
                    svg::region_map("Plain SVM (sign of g)", run_result.baseline, grid, run_result.data.points,
                                    run_result.data.labels));
    std::size_t index = 1;
    for (const auto &e : run_result.experiments) {
        const auto &r1 = e.tester.region1();
        const auto &r2 = e.tester.region2();
        out << fmt::format("experiment {}: {}\n", e.experiment.name, describe(e.experiment.config));
        out << fmt::format("  test 1 acceptance [{:.6f}, {:.6f}]  training rejection {:.4f}\n", r1.lower(), r1.upper(),
                           e.class1_self_rejection);
        out << fmt::format("  test 2 acceptance [{:.6f}, {:.6f}]  training rejection {:.4f}\n", r2.lower(), r2.upper(),
                           e.class2_self_rejection);
        std::array<std::size_t, 4> counts{};
        for (Decision d : e.grid_decisions) {
            ++counts[static_cast<std::size_t>(d)];
        }
        out << fmt::format("  grid cells: class1 {}, class2 {}, uncertain_overlap {}, uncertain_outlier {}\n",
                           counts[0], counts[1], counts[2], counts[3]);
        const std::string title = fmt::format("Experiment ({}): {}", e.experiment.name, describe(e.experiment.config));
        panels.push_back({title, r1, r2});
        write_text_file(dir / fmt::format("spiral_regions_exp{}.svg", index),
                        svg::region_map(title, e.grid_decisions, grid, run_result.data.points, run_result.data.labels));
        write_snapshot(make_snapshot(e.tester, fmt::format("spiral experiment ({})", e.experiment.name),
                                     run_result.class1_scores.size(), run_result.class2_scores.size(),
                                     run_result.fit.model),
                       dir / fmt::format("spiral_exp{}.snapshot", index));
        ++index;
    }
    write_text_file(dir / "spiral_histograms.svg",
                    svg::histogram_figure(run_result.class1_scores, run_result.class2_scores, flags.bins, panels));
    out << fmt::format("artifacts written to {}\n", dir.string());
    return run_result.fit.converged ? exit_ok : exit_nonconvergence;
}

// ---------------------------------------------------------------- calibrate

struct CalibrateFlags {
    std::string scores;
    std::string snapshot;
    QuantileFlags quantiles;
    std::size_t min_count = 20;
    std::string out_dir;
    std::size_t bins = 30;
};

int cmd_calibrate(const CalibrateFlags &flags, std::ostream &out) {
    const TestConfig config = flags.quantiles.resolve(0.025);
    const auto train = require_labeled(read_scores(flags.scores), "score");
    const auto tester = calibrate_from(train, config, flags.min_count);
    write_snapshot(make_snapshot(tester, fmt::format("calibrated from {}", flags.scores), train.class1.size(),
                                 train.class2.size()),
                   flags.snapshot);
    out << fmt::format("quantile points: {}\n", describe(config));
    out << fmt::format("test 1 (class1, N1={}): acceptance [{}, {}], training rejection {:.4f}\n",
                       train.class1.size(), format_double(tester.region1().lower()),
                       format_double(tester.region1().upper()), rejection_rate(tester.region1(), train.class1));
    out << fmt::format("test 2 (class2, N2={}): acceptance [{}, {}], training rejection {:.4f}\n",
                       train.class2.size(), format_double(tester.region2().lower()),
                       format_double(tester.region2().upper()), rejection_rate(tester.region2(), train.class2));
    out << fmt::format("snapshot written to {}\n", flags.snapshot);
    if (!flags.out_dir.empty()) {
        const fs::path dir(flags.out_dir);
        ensure_dir(dir);
        const std::vector<svg::ThresholdPanel> panels{{describe(config), tester.region1(), tester.region2()}};
        write_text_file(dir / "calibration_histograms.svg",
                        svg::histogram_figure(train.class1, train.class2, flags.bins, panels));
    }
    return exit_ok;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateFlags {
    std::string scores;
    std::string snapshot;
    std::string train;
    std::vector<double> alphas;
    QuantileFlags quantiles;
    int positive_class = 1;
    bool merge_uncertain = false;
    std::size_t min_count = 20;
    std::string report;
};

int cmd_evaluate(const EvaluateFlags &flags, std::ostream &out) {
    if (flags.snapshot.empty() == flags.train.empty()) {
        throw UsageError("evaluate needs exactly one of --snapshot or --train");
    }
    if (!flags.snapshot.empty() && (flags.quantiles.any_q() || !flags.alphas.empty())) {
        throw UsageError("--alpha and --q flags apply to --train; a snapshot fixes its own regions");
    }
    std::vector<TestConfig> configs;
    if (flags.train.empty()) {
        // filled from the snapshot below
    } else if (flags.quantiles.any_q()) {
        configs.push_back(flags.quantiles.resolve(0.025));
    } else {
        const std::vector<double> alphas = flags.alphas.empty() ? std::vector<double>{0.01, 0.025, 0.05} : flags.alphas;
        for (double a : alphas) {
            configs.push_back(QuantileFlags::symmetric(a));
        }
    }

    const auto test = require_labeled(read_scores(flags.scores), "score");
    std::vector<CalibratedTester> testers;
    if (!flags.snapshot.empty()) {
        testers.push_back(read_snapshot(flags.snapshot).tester());
    } else {
        const auto train = require_labeled(read_scores(flags.train), "training score");
        for (const auto &config : configs) {
            testers.push_back(calibrate_from(train, config, flags.min_count));
        }
    }

    const std::string uncertain_header =
        flags.merge_uncertain ? fmt::format("{:>10}", "uncertain") : fmt::format("{:>9} {:>9}", "overlap", "outlier");
    out << fmt::format("{:>8} {:>9} {:>9} {:>9} {:>9} {:>11} {:>9} {}\n", "alpha(%)", "coverage", "accuracy", "recall",
                       "precision", "specificity", "f1", uncertain_header);
    std::string report = "alpha,coverage,accuracy,recall,precision,specificity,f1,uncertain_overlap,uncertain_outlier\n";
    const auto exact = [](const std::optional<double> &v) { return v ? format_double(*v) : std::string("na"); };
    for (const auto &tester : testers) {
        const auto decisions = tester.decide_batch(test.scores);
        const auto r = evaluate(decisions, test.labels, flags.positive_class);
        const auto alpha = common_alpha(tester.config());
        const std::string alpha_text = alpha ? percent(*alpha) : std::string("custom");
        const std::string uncertain = flags.merge_uncertain
                                          ? fmt::format("{:>10}", r.abstained)
                                          : fmt::format("{:>9} {:>9}", r.abstained_overlap, r.abstained_outlier);
        out << fmt::format("{:>8} {:>9.2f} {:>9} {:>9} {:>9} {:>11} {:>9} {}\n", alpha_text, 100.0 * r.coverage,
                           percent_or_na(r.accuracy), percent_or_na(r.recall), percent_or_na(r.precision),
                           percent_or_na(r.specificity), percent_or_na(r.f1), uncertain);
        report += fmt::format("{},{},{},{},{},{},{},{},{}\n", alpha ? format_double(*alpha) : std::string("custom"),
                              format_double(r.coverage), exact(r.accuracy), exact(r.recall), exact(r.precision),
                              exact(r.specificity), exact(r.f1), r.abstained_overlap, r.abstained_outlier);
    }
    if (!flags.report.empty()) {
        write_text_file(flags.report, report);
    }
    return exit_ok;
}

// ---------------------------------------------------------------- decide

struct DecideFlags {
    std::string snapshot;
    std::string scores;
    std::string out;
    bool merge_uncertain = false;
};

int cmd_decide(const DecideFlags &flags, std::ostream &out) {
    const auto tester = read_snapshot(flags.snapshot).tester();
    const auto records = read_scores(flags.scores);
    bool labeled = false;
    for (const auto &r : records) {
        labeled = labeled || r.label.has_value();
    }
    std::string text = labeled ? "score,label,decision\n" : "score,decision\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Decision d = tester.decide(records[i].score);
        const std::string_view name = flags.merge_uncertain && is_abstention(d) ? "uncertain" : to_string(d);
        text += format_double(records[i].score);
        if (labeled) {
            text += records[i].label ? fmt::format(",{}", *records[i].label) : std::string(",");
        }
        text += fmt::format(",{}\n", name);
    }
    if (flags.out.empty()) {
        out << text;
    } else {
        write_text_file(flags.out, text);
    }
    return exit_ok;
}

// ---------------------------------------------------------------- gen

struct GenFlags {
    std::string kind = "scores";
    std::string out;
    SpiralSpec spiral;
    ScoreMixtureSpec mixture;
    std::uint64_t seed = 1;
};

int cmd_gen(const GenFlags &flags, std::ostream &out) {
    if (flags.kind == "spiral") {
        SpiralSpec spec = flags.spiral;
        spec.seed = flags.seed;
        const auto data = generate_spiral(spec);
        write_points(flags.out, data);
        out << fmt::format("wrote {} spiral points to {}\n", data.points.size(), flags.out);
    } else if (flags.kind == "scores") {
        ScoreMixtureSpec spec = flags.mixture;
        spec.seed = flags.seed;
        const auto data = generate_scores(spec);
        std::vector<ScoreRecord> records;
        records.reserve(data.scores.size());
        for (std::size_t i = 0; i < data.scores.size(); ++i) {
            records.push_back({data.scores[i], data.labels[i]});
        }
        write_scores(flags.out, records);
        out << fmt::format("wrote {} scores to {}\n", records.size(), flags.out);
    } else {
        throw UsageError(fmt::format("unknown --kind '{}' (want spiral or scores)", flags.kind));
    }
    return exit_ok;
}

void add_spiral_spec(CLI::App &app, SpiralSpec &spec) {
    app.add_option("--n-per-class", spec.n_per_class, "Spiral points per class")->capture_default_str();
    app.add_option("--turns", spec.turns, "Spiral revolutions")->capture_default_str();
    app.add_option("--noise", spec.noise_sigma, "Isotropic Gaussian noise sigma")->capture_default_str();
    app.add_option("--radius-scale", spec.radius_scale, "Outer radius of the arms")->capture_default_str();
}

}  // namespace

std::vector<Experiment> spiral_experiments() {
    return {
        {"i", TestConfig{0.025, 0.975, 0.025, 0.975}},
        {"ii", TestConfig{0.05, 0.975, 0.025, 0.95}},
        {"iii", TestConfig{0.05, 0.99, 0.01, 0.95}},
    };
}

SpiralRun run_spiral(const SpiralOptions &options) {
    auto data = generate_spiral(options.spiral);
    auto fit = train_svm(data.points, data.labels, KernelParams(options.gamma), options.smo);

    std::vector<double> scores;
    std::vector<double> class1;
    std::vector<double> class2;
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        const double g = fit.model.decision_function(data.points[i]);
        scores.push_back(g);
        (data.labels[i] > 0 ? class1 : class2).push_back(g);
    }
    const auto d1 = EmpiricalDistribution::from_samples(class1, options.min_count);
    const auto d2 = EmpiricalDistribution::from_samples(class2, options.min_count);

    auto grid = decision_grid(fit.model, options.x_range, options.y_range, options.resolution);
    std::vector<Decision> baseline;
    baseline.reserve(grid.values.size());
    for (double g : grid.values) {
        baseline.push_back(g >= 0.0 ? Decision::class1 : Decision::class2);
    }

    std::vector<SpiralExperimentResult> experiments;
    for (const auto &e : spiral_experiments()) {
        auto tester = CalibratedTester::calibrate(d1, d2, e.config);
        auto decisions = tester.decide_batch(grid.values);
        const double rej1 = rejection_rate(tester.region1(), class1);
        const double rej2 = rejection_rate(tester.region2(), class2);
        experiments.push_back({e, tester, std::move(decisions), rej1, rej2});
    }
    return SpiralRun{std::move(data),   std::move(fit),  std::move(scores),   std::move(class1),
                     std::move(class2), std::move(grid), std::move(baseline), std::move(experiments)};
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Classification with abstention by two one-sample tests on a classifier score"};
    app.require_subcommand(1);

    SpiralFlags spiral;
    auto *spiral_cmd = app.add_subcommand("spiral", "Spiral benchmark: SVM, three experiments, SVG figures");
    add_spiral_spec(*spiral_cmd, spiral.options.spiral);
    spiral_cmd->add_option("--seed", spiral.options.spiral.seed, "Data and solver seed")->capture_default_str();
    spiral_cmd->add_option("--c", spiral.options.smo.c, "SVM box constraint")->capture_default_str();
    spiral_cmd->add_option("--gamma", spiral.options.gamma, "RBF kernel gamma")->capture_default_str();
    spiral_cmd->add_option("--tol", spiral.options.smo.tolerance, "SMO KKT tolerance")->capture_default_str();
    spiral_cmd->add_option("--max-passes", spiral.options.smo.max_passes, "SMO budget in units of n updates")
        ->capture_default_str();
    spiral_cmd->add_option("--resolution", spiral.options.resolution, "Region-map cells per axis")
        ->capture_default_str();
    spiral_cmd->add_option("--bins", spiral.bins, "Histogram bins")->capture_default_str();
    spiral_cmd->add_option("--out-dir", spiral.out_dir, "Directory for figures and data")->capture_default_str();

    CalibrateFlags calibrate;
    auto *calibrate_cmd = app.add_subcommand("calibrate", "Calibrate acceptance regions from labeled training scores");
    calibrate_cmd->add_option("--scores", calibrate.scores, "Labeled training score CSV")->required();
    calibrate_cmd->add_option("--snapshot", calibrate.snapshot, "Snapshot file to write")->required();
    calibrate.quantiles.add_to(*calibrate_cmd, true);
    calibrate_cmd->add_option("--min-count", calibrate.min_count, "Minimum samples per class")->capture_default_str();
    calibrate_cmd->add_option("--out-dir", calibrate.out_dir, "Also write a histogram SVG here");
    calibrate_cmd->add_option("--bins", calibrate.bins, "Histogram bins")->capture_default_str();

    EvaluateFlags evaluate_flags;
    auto *evaluate_cmd = app.add_subcommand("evaluate", "Coverage and selective metrics on labeled test scores");
    evaluate_cmd->add_option("--scores", evaluate_flags.scores, "Labeled test score CSV")->required();
    evaluate_cmd->add_option("--snapshot", evaluate_flags.snapshot, "Evaluate one calibrated snapshot");
    evaluate_cmd->add_option("--train", evaluate_flags.train, "Labeled training scores to calibrate per alpha");
    evaluate_cmd->add_option("--alpha", evaluate_flags.alphas, "Significance levels to sweep (default 0.01 0.025 0.05)");
    evaluate_flags.quantiles.add_to(*evaluate_cmd, false);
    evaluate_cmd->add_option("--positive-class", evaluate_flags.positive_class, "Label counted as positive")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    evaluate_cmd->add_flag("--merge-uncertain", evaluate_flags.merge_uncertain, "Report one uncertain count");
    evaluate_cmd->add_option("--min-count", evaluate_flags.min_count, "Minimum samples per class")
        ->capture_default_str();
    evaluate_cmd->add_option("--report", evaluate_flags.report, "Write exact values as CSV");

    DecideFlags decide_flags;
    auto *decide_cmd = app.add_subcommand("decide", "Append a decision column to a score CSV");
    decide_cmd->add_option("--snapshot", decide_flags.snapshot, "Calibration snapshot")->required();
    decide_cmd->add_option("--scores", decide_flags.scores, "Score CSV, label column optional")->required();
    decide_cmd->add_option("--out", decide_flags.out, "Output CSV (default: stdout)");
    decide_cmd->add_flag("--merge-uncertain", decide_flags.merge_uncertain, "Write 'uncertain' for both abstentions");

    GenFlags gen;
    auto *gen_cmd = app.add_subcommand("gen", "Export a synthetic data set as CSV");
    gen_cmd->add_option("--kind", gen.kind, "spiral or scores")
        ->check(CLI::IsMember({"spiral", "scores"}))
        ->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output CSV")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    add_spiral_spec(*gen_cmd, gen.spiral);
    gen_cmd->add_option("--mean1", gen.mixture.mean1, "Label-0 score mean")->capture_default_str();
    gen_cmd->add_option("--mean2", gen.mixture.mean2, "Label-1 score mean")->capture_default_str();
    gen_cmd->add_option("--sigma1", gen.mixture.sigma1, "Label-0 score sigma")->capture_default_str();
    gen_cmd->add_option("--sigma2", gen.mixture.sigma2, "Label-1 score sigma")->capture_default_str();
    gen_cmd->add_option("--n1", gen.mixture.n1, "Label-0 count")->capture_default_str();
    gen_cmd->add_option("--n2", gen.mixture.n2, "Label-1 count")->capture_default_str();
    gen_cmd->add_option("--outlier-fraction", gen.mixture.outlier_fraction, "Shifted fraction per class")
        ->capture_default_str();
    gen_cmd->add_option("--outlier-shift", gen.mixture.outlier_shift, "Shift applied to outliers")
        ->capture_default_str();

    std::vector<const char *> argv{"dualtest"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (spiral_cmd->parsed()) {
            try {
                spiral.options.spiral.validate();
                spiral.options.smo.validate();
                KernelParams{spiral.options.gamma};
                if (spiral.options.resolution < 2 || spiral.bins == 0) {
                    throw UsageError("--resolution must be >= 2 and --bins >= 1");
                }
            } catch (const Error &e) {
                throw UsageError(e.what());
            }
            spiral.options.smo.seed = spiral.options.spiral.seed;
            return cmd_spiral(spiral, out);
        }
        if (calibrate_cmd->parsed()) {
            return cmd_calibrate(calibrate, out);
        }
        if (evaluate_cmd->parsed()) {
            return cmd_evaluate(evaluate_flags, out);
        }
        if (decide_cmd->parsed()) {
            return cmd_decide(decide_flags, out);
        }
        if (gen_cmd->parsed()) {
            try {
                gen.spiral.validate();
                gen.mixture.validate();
            } catch (const Error &e) {
                throw UsageError(e.what());
            }
            return cmd_gen(gen, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}

}  // namespace dualtest::cli
