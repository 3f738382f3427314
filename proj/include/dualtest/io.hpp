#pragma once

#include "dualtest/datasets.hpp"
#include "dualtest/svm.hpp"
#include "dualtest/testing.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dualtest {

/// One row of a score CSV: a finite test-statistic value and an optional 0/1 label.
struct ScoreRecord {
    double score;
    std::optional<int> label;

    friend bool operator==(const ScoreRecord &, const ScoreRecord &) = default;
};

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Score CSV: header row naming `score` and optionally `label` (any order),
/// comma separated, LF or CRLF endings, blank lines ignored. An empty label
/// field means the row is unlabeled. Error positions are 1-based line numbers
/// (the header is line 1).
std::vector<ScoreRecord> parse_scores(std::string_view text);
std::vector<ScoreRecord> read_scores(const std::filesystem::path &path);

/// Writes `score` alone when no record carries a label, `score,label` otherwise.
std::string format_scores(std::span<const ScoreRecord> records);
void write_scores(const std::filesystem::path &path, std::span<const ScoreRecord> records);

/// Spiral points as `x,y,label` with labels +1 / -1.
std::string format_points(const SpiralData &data);
void write_points(const std::filesystem::path &path, const SpiralData &data);

inline constexpr int snapshot_format_version = 1;

/// Calibrated acceptance regions plus what produced them. `model` is set when
/// the scores came from an SVM trained by this tool.
struct CalibrationSnapshot {
    int format_version = snapshot_format_version;
    TestConfig config;
    AcceptanceRegion region1;
    AcceptanceRegion region2;
    std::string provenance;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::optional<SvmModel> model;

    [[nodiscard]] CalibratedTester tester() const { return CalibratedTester(region1, region2, config); }

    friend bool operator==(const CalibrationSnapshot &, const CalibrationSnapshot &) = default;
};

CalibrationSnapshot make_snapshot(const CalibratedTester &tester, std::string provenance, std::size_t n1,
                                  std::size_t n2, std::optional<SvmModel> model = std::nullopt);

/// Line-oriented `key = value` text; reals are written with format_double.
std::string format_snapshot(const CalibrationSnapshot &snapshot);
/// Throws ErrorCode::unsupported_version for an unknown format_version and
/// ErrorCode::parse_error (with line number) for anything malformed.
CalibrationSnapshot parse_snapshot(std::string_view text);

void write_snapshot(const CalibrationSnapshot &snapshot, const std::filesystem::path &path);
CalibrationSnapshot read_snapshot(const std::filesystem::path &path);

/// Whole-file helpers shared by the readers and writers; throw ErrorCode::file_not_found.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace dualtest
