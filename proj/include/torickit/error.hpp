#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torickit {

enum class ErrorCode {
    DimensionMismatch,
    IndexOutOfRange,
    ZeroVector,
    IndependenceViolation,
    Underdetermined,
    Inconsistent,
    NonIntegral,
    NonPositive,
    NotInKernel,
    NoPrimitiveCollection,
    DegreeMismatch,
    SizeMismatch,
    NonKernelIncrement,
    DuplicatePoints,
    Condition1Failed,
    Condition2Failed,
    KOutOfRange,
    InvalidFan,
    NotSmooth,
    RLimitExceeded,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a stable machine-readable code. The CLI surfaces
/// `code()` verbatim in its JSON error objects.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace torickit
