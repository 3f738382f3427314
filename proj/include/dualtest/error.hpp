#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dualtest {

enum class ErrorCode {
    empty_or_too_small,
    non_finite_value,
    p_out_of_range,
    zero_bins,
    invalid_argument,
    single_class_input,
    dimension_mismatch,
    length_mismatch,
    shape_mismatch,
    bad_range,
    file_not_found,
    parse_error,
    non_finite_score,
    unsupported_version,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type thrown by every module of the library.
///
/// `position()` carries the offending element index (batch operations) or the
/// 1-based physical line number (file parsing) when one applies.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message, std::optional<std::size_t> position = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<std::size_t> position() const noexcept { return position_; }

  private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

}  // namespace dualtest
