#include "dualtest/io.hpp"

#include "dualtest/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <sstream>

namespace dualtest {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

/// Calls fn(line_number, line) for every line, line numbers 1-based, CR stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        fn(++line_no, line);
        start = end + 1;
    }
}

std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

template <typename Int>
std::optional<Int> parse_integer(std::string_view s) {
    s = trim(s);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out += ch;
        }
    }
    return out;
}

std::optional<std::string> unescape(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) {
            return std::nullopt;
        }
        switch (s[i]) {
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 'r': out += '\r'; break;
            default: return std::nullopt;
        }
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) {
        throw Error(ErrorCode::invalid_argument, "cannot format number");
    }
    return std::string(buf.data(), ptr);
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::file_not_found, fmt::format("cannot open '{}'", path.string()));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::file_not_found, fmt::format("cannot write '{}'", path.string()));
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw Error(ErrorCode::file_not_found, fmt::format("write to '{}' failed", path.string()));
    }
}

std::vector<ScoreRecord> parse_scores(std::string_view text) {
    std::vector<ScoreRecord> records;
    std::optional<std::size_t> score_col;
    std::optional<std::size_t> label_col;
    std::size_t columns = 0;
    bool have_header = false;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (trim(line).empty()) {
            return;
        }
        const auto fields = split(line, ',');
        if (!have_header) {
            have_header = true;
            columns = fields.size();
            for (std::size_t c = 0; c < fields.size(); ++c) {
                auto name = trim(fields[c]);
                if (line_no == 1 && c == 0 && name.starts_with("\xEF\xBB\xBF")) {
                    name.remove_prefix(3);
                }
                std::optional<std::size_t> *slot = name == "score"   ? &score_col
                                                    : name == "label" ? &label_col
                                                                      : nullptr;
                if (slot == nullptr || slot->has_value()) {
                    throw Error(ErrorCode::parse_error,
                                fmt::format("unexpected header column '{}' (want score[,label])", name), line_no);
                }
                *slot = c;
            }
            if (!score_col) {
                throw Error(ErrorCode::parse_error, "header has no 'score' column", line_no);
            }
            return;
        }
        if (fields.size() != columns) {
            throw Error(ErrorCode::parse_error,
                        fmt::format("expected {} fields, found {}", columns, fields.size()), line_no);
        }
        const auto score = parse_real(fields[*score_col]);
        if (!score) {
            throw Error(ErrorCode::parse_error, fmt::format("'{}' is not a number", trim(fields[*score_col])),
                        line_no);
        }
        if (!std::isfinite(*score)) {
            throw Error(ErrorCode::non_finite_score, "score is not finite", line_no);
        }
        ScoreRecord rec{*score, std::nullopt};
        if (label_col) {
            const auto raw = trim(fields[*label_col]);
            if (raw == "0" || raw == "1") {
                rec.label = raw == "1" ? 1 : 0;
            } else if (!raw.empty()) {
                throw Error(ErrorCode::parse_error, fmt::format("label '{}' is not 0 or 1", raw), line_no);
            }
        }
        records.push_back(rec);
    });
    if (!have_header) {
        throw Error(ErrorCode::parse_error, "score file has no header row", 1);
    }
    return records;
}

std::vector<ScoreRecord> read_scores(const std::filesystem::path &path) { return parse_scores(read_text_file(path)); }

std::string format_scores(std::span<const ScoreRecord> records) {
    bool labeled = false;
    for (const auto &r : records) {
        labeled = labeled || r.label.has_value();
    }
    std::string out = labeled ? "score,label\n" : "score\n";
    for (const auto &r : records) {
        out += format_double(r.score);
        if (labeled) {
            out += ',';
            if (r.label) {
                out += *r.label == 1 ? '1' : '0';
            }
        }
        out += '\n';
    }
    return out;
}

void write_scores(const std::filesystem::path &path, std::span<const ScoreRecord> records) {
    write_text_file(path, format_scores(records));
}

std::string format_points(const SpiralData &data) {
    std::string out = "x,y,label\n";
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        out += fmt::format("{},{},{}\n", format_double(data.points[i].x), format_double(data.points[i].y),
                           data.labels[i]);
    }
    return out;
}

void write_points(const std::filesystem::path &path, const SpiralData &data) {
    write_text_file(path, format_points(data));
}

CalibrationSnapshot make_snapshot(const CalibratedTester &tester, std::string provenance, std::size_t n1,
                                  std::size_t n2, std::optional<SvmModel> model) {
    return CalibrationSnapshot{snapshot_format_version, tester.config(), tester.region1(), tester.region2(),
                               std::move(provenance), n1, n2, std::move(model)};
}

std::string format_snapshot(const CalibrationSnapshot &s) {
    std::string out = "# dualtest calibration snapshot\n";
    const auto put = [&out](std::string_view key, const std::string &value) {
        out += fmt::format("{} = {}\n", key, value);
    };
    put("format_version", std::to_string(s.format_version));
    put("provenance", escape(s.provenance));
    put("class1_lower_p", format_double(s.config.class1_lower_p));
    put("class1_upper_p", format_double(s.config.class1_upper_p));
    put("class2_lower_p", format_double(s.config.class2_lower_p));
    put("class2_upper_p", format_double(s.config.class2_upper_p));
    put("region1_lower", format_double(s.region1.lower()));
    put("region1_upper", format_double(s.region1.upper()));
    put("region2_lower", format_double(s.region2.lower()));
    put("region2_upper", format_double(s.region2.upper()));
    put("n1", std::to_string(s.n1));
    put("n2", std::to_string(s.n2));
    if (s.model) {
        const auto &m = *s.model;
        put("svm_gamma", format_double(m.kernel().gamma()));
        put("svm_c", format_double(m.c()));
        put("svm_bias", format_double(m.bias()));
        for (std::size_t l = 0; l < m.duals().size(); ++l) {
            const auto &sv = m.support_vectors()[l];
            put("svm_sv", fmt::format("{} {} {}", format_double(sv.x), format_double(sv.y),
                                      format_double(m.duals()[l])));
        }
    }
    return out;
}

CalibrationSnapshot parse_snapshot(std::string_view text) {
    std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> values;
    std::vector<Point2> support;
    std::vector<double> duals;
    std::size_t last_line = 1;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        last_line = line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            return;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::parse_error, "expected 'key = value'", line_no);
        }
        const std::string key(trim(body.substr(0, eq)));
        const auto value = trim(body.substr(eq + 1));
        if (key == "svm_sv") {
            const auto parts = split(value, ' ');
            std::array<double, 3> v{};
            bool ok = parts.size() == 3;
            for (std::size_t k = 0; ok && k < 3; ++k) {
                const auto parsed = parse_real(parts[k]);
                ok = parsed.has_value() && std::isfinite(*parsed);
                v[k] = ok ? *parsed : 0.0;
            }
            if (!ok) {
                throw Error(ErrorCode::parse_error, "svm_sv needs three finite numbers 'x y dual'", line_no);
            }
            support.push_back({v[0], v[1]});
            duals.push_back(v[2]);
            return;
        }
        if (!values.emplace(key, std::pair{std::string(value), line_no}).second) {
            throw Error(ErrorCode::parse_error, fmt::format("duplicate key '{}'", key), line_no);
        }
    });

    const auto version_it = values.find("format_version");
    if (version_it == values.end()) {
        throw Error(ErrorCode::parse_error, "missing format_version", 1);
    }
    const auto version = parse_integer<int>(version_it->second.first);
    if (!version) {
        throw Error(ErrorCode::parse_error, "format_version is not an integer", version_it->second.second);
    }
    if (*version != snapshot_format_version) {
        throw Error(ErrorCode::unsupported_version,
                    fmt::format("snapshot format version {} is not supported (expected {})", *version,
                                snapshot_format_version),
                    version_it->second.second);
    }

    const auto take = [&](std::string_view key) -> std::pair<std::string, std::size_t> {
        const auto it = values.find(key);
        if (it == values.end()) {
            throw Error(ErrorCode::parse_error, fmt::format("missing key '{}'", key), last_line);
        }
        auto out = it->second;
        values.erase(it);
        return out;
    };
    const auto real = [&](std::string_view key) {
        const auto [raw, line] = take(key);
        const auto v = parse_real(raw);
        if (!v || !std::isfinite(*v)) {
            throw Error(ErrorCode::parse_error, fmt::format("'{}' is not a finite number", key), line);
        }
        return *v;
    };
    const auto count = [&](std::string_view key) {
        const auto [raw, line] = take(key);
        const auto v = parse_integer<std::size_t>(raw);
        if (!v) {
            throw Error(ErrorCode::parse_error, fmt::format("'{}' is not a count", key), line);
        }
        return *v;
    };

    values.erase("format_version");
    const auto [raw_provenance, provenance_line] = take("provenance");
    auto provenance = unescape(raw_provenance);
    if (!provenance) {
        throw Error(ErrorCode::parse_error, "bad escape in provenance", provenance_line);
    }
    TestConfig config{real("class1_lower_p"), real("class1_upper_p"), real("class2_lower_p"),
                      real("class2_upper_p")};
    const double r1_lo = real("region1_lower");
    const double r1_hi = real("region1_upper");
    const double r2_lo = real("region2_lower");
    const double r2_hi = real("region2_upper");
    const std::size_t n1 = count("n1");
    const std::size_t n2 = count("n2");

    const bool has_model = values.contains("svm_gamma") || !support.empty();
    const double gamma = has_model ? real("svm_gamma") : 0.0;
    const double c = has_model ? real("svm_c") : 0.0;
    const double bias = has_model ? real("svm_bias") : 0.0;
    if (!values.empty()) {
        const auto &[key, entry] = *values.begin();
        throw Error(ErrorCode::parse_error, fmt::format("unknown key '{}'", key), entry.second);
    }

    try {
        std::optional<SvmModel> model;
        if (has_model) {
            model.emplace(std::move(support), std::move(duals), bias, KernelParams(gamma), c);
        }
        CalibrationSnapshot s{*version, config, AcceptanceRegion(r1_lo, r1_hi), AcceptanceRegion(r2_lo, r2_hi),
                              std::move(*provenance), n1, n2, std::move(model)};
        s.config.validate();
        return s;
    } catch (const Error &e) {
        throw Error(ErrorCode::parse_error, fmt::format("invalid snapshot contents: {}", e.what()));
    }
}

void write_snapshot(const CalibrationSnapshot &snapshot, const std::filesystem::path &path) {
    write_text_file(path, format_snapshot(snapshot));
}

CalibrationSnapshot read_snapshot(const std::filesystem::path &path) { return parse_snapshot(read_text_file(path)); }

}  // namespace dualtest
