#pragma once

#include <stdexcept>
#include <string>

namespace nubar {

// Error codes shared by the library and the CLI. Every throwing path in the
// library uses Error so callers can map failures to a stable machine-readable
// code plus a human message.
enum class ErrorCode {
    EmptyGeneratorSet,
    UnitIdeal,
    DimensionMismatch,
    DimensionTooLarge,
    ZeroPolynomial,
    ZeroDenominator,
    InfiniteOperand,
    NotPrimary,
    NotFound,
    NotIntegral,
    NonPositiveWeight,
    TruncationMismatch,
    TruncationTooSmall,
    IndeterminateOrder,
    PolygonUnsupportedDimension,
    NoCompactSide,
    SmoothBranch,
    InvalidCharSequence,
    InvalidExponent,
    ContainmentViolated,
    InternalCheckFailed,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
        case ErrorCode::UnitIdeal: return "UnitIdeal";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::InfiniteOperand: return "InfiniteOperand";
        case ErrorCode::NotPrimary: return "NotPrimary";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::NotIntegral: return "NotIntegral";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::TruncationMismatch: return "TruncationMismatch";
        case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorCode::IndeterminateOrder: return "IndeterminateOrder";
        case ErrorCode::PolygonUnsupportedDimension: return "PolygonUnsupportedDimension";
        case ErrorCode::NoCompactSide: return "NoCompactSide";
        case ErrorCode::SmoothBranch: return "SmoothBranch";
        case ErrorCode::InvalidCharSequence: return "InvalidCharSequence";
        case ErrorCode::InvalidExponent: return "InvalidExponent";
        case ErrorCode::ContainmentViolated: return "ContainmentViolated";
        case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code), message_(message) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

  private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

// Internal consistency assertion: used where two independent computations of
// the same quantity are required to agree. Never compiled out.
inline void check(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::InternalCheckFailed, what);
}

} // namespace nubar
