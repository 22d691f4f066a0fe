#pragma once

/**
 * @file error.hpp
 * @brief Error type shared by every module.
 *
 * All failures are reported as `curvilinear::Error`, which carries a
 * machine-readable code next to the human message. The CLI maps codes to
 * exit statuses and the JSON report embeds the code name verbatim.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvilinear {

enum class ErrorCode {
    NonInvertibleDenominator,
    NonIntegralSpecialization,
    NegativeExponent,
    IrrationalCenter,
    NonReducedInput,
    UnknownDivisor,
    MissingClassData,
    DivisionByZeroSeries,
    BadReduction,
    BudgetExceeded,
    InvalidArgument,
    SyntaxError,
    ZeroConstantViolation,
    InvalidResolutionFile,
};

constexpr std::string_view code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::NonIntegralSpecialization: return "NonIntegralSpecialization";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::IrrationalCenter: return "IrrationalCenter";
    case ErrorCode::NonReducedInput: return "NonReducedInput";
    case ErrorCode::UnknownDivisor: return "UnknownDivisor";
    case ErrorCode::MissingClassData: return "MissingClassData";
    case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroConstantViolation: return "ZeroConstantViolation";
    case ErrorCode::InvalidResolutionFile: return "InvalidResolutionFile";
    }
    return "Unknown";
}

/// Input-side errors: the user handed us something malformed.
constexpr bool is_input_error(ErrorCode code) {
    return code == ErrorCode::SyntaxError || code == ErrorCode::ZeroConstantViolation ||
           code == ErrorCode::InvalidResolutionFile || code == ErrorCode::InvalidArgument;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> offset = {})
        : std::runtime_error(std::string(code_name(code)) + ": " + message),
          code_(code), offset_(offset) {}

    ErrorCode code() const noexcept { return code_; }

    /// Byte offset into the parsed text, for syntax errors.
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> offset_;
};

} // namespace curvilinear
