#pragma once

#include "dualtest/datasets.hpp"
#include "dualtest/svm.hpp"
#include "dualtest/testing.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dualtest::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_data = 2,
    /// Artifacts were written but SMO hit its iteration budget.
    exit_nonconvergence = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

struct Experiment {
    std::string name;
    TestConfig config;
};

/// The three spiral experiments: (i) both tests at 2.5%/97.5%; (ii) test 1 at
/// 5.0%/97.5%, test 2 at 2.5%/95.0%; (iii) test 1 at 5.0%/99.0%, test 2 at 1.0%/95.0%.
std::vector<Experiment> spiral_experiments();

struct SpiralOptions {
    SpiralSpec spiral;
    double gamma = 8.0;
    SmoSettings smo;
    std::size_t resolution = 200;
    std::pair<double, double> x_range{-1.6, 1.6};
    std::pair<double, double> y_range{-1.6, 1.6};
    std::size_t min_count = 20;
};

struct SpiralExperimentResult {
    Experiment experiment;
    CalibratedTester tester;
    /// Row-major decisions over the grid cells.
    std::vector<Decision> grid_decisions;
    /// Training-set rejection rates of test (1) on C1 and test (2) on C2.
    double class1_self_rejection;
    double class2_self_rejection;
};

struct SpiralRun {
    SpiralData data;
    SvmFit fit;
    /// g(x) of every training point, in data order.
    std::vector<double> train_scores;
    std::vector<double> class1_scores;
    std::vector<double> class2_scores;
    DecisionGrid grid;
    /// Plain SVM: class1 where g >= 0, class2 elsewhere.
    std::vector<Decision> baseline;
    std::vector<SpiralExperimentResult> experiments;
};

/// Data generation, SVM training, calibration and grid evaluation behind `spiral`.
SpiralRun run_spiral(const SpiralOptions &options);

}  // namespace dualtest::cli
