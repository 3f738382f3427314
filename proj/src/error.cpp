#include "dualtest/error.hpp"

#include <fmt/format.h>

namespace dualtest {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::empty_or_too_small: return "EmptyOrTooSmall";
        case ErrorCode::non_finite_value: return "NonFiniteValue";
        case ErrorCode::p_out_of_range: return "POutOfRange";
        case ErrorCode::zero_bins: return "ZeroBins";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::single_class_input: return "SingleClassInput";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::length_mismatch: return "LengthMismatch";
        case ErrorCode::shape_mismatch: return "ShapeMismatch";
        case ErrorCode::bad_range: return "BadRange";
        case ErrorCode::file_not_found: return "FileNotFound";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::non_finite_score: return "NonFiniteScore";
        case ErrorCode::unsupported_version: return "UnsupportedVersion";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string &message, std::optional<std::size_t> position) {
    if (position) {
        return fmt::format("{} (at {}): {}", to_string(code), *position, message);
    }
    return fmt::format("{}: {}", to_string(code), message);
}

}  // namespace

Error::Error(ErrorCode code, const std::string &message, std::optional<std::size_t> position)
    : std::runtime_error(compose(code, message, position)), code_(code), position_(position) {}

}  // namespace dualtest
