#include "torickit/error.hpp"

namespace torickit {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::ZeroVector: return "ZERO_VECTOR";
    case ErrorCode::IndependenceViolation: return "INDEPENDENCE_VIOLATION";
    case ErrorCode::Underdetermined: return "UNDERDETERMINED";
    case ErrorCode::Inconsistent: return "INCONSISTENT";
    case ErrorCode::NonIntegral: return "NON_INTEGRAL";
    case ErrorCode::NonPositive: return "NON_POSITIVE";
    case ErrorCode::NotInKernel: return "NOT_IN_KERNEL";
    case ErrorCode::NoPrimitiveCollection: return "NO_PRIMITIVE_COLLECTION";
    case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::NonKernelIncrement: return "NON_KERNEL_INCREMENT";
    case ErrorCode::DuplicatePoints: return "DUPLICATE_POINTS";
    case ErrorCode::Condition1Failed: return "CONDITION_1_FAILED";
    case ErrorCode::Condition2Failed: return "CONDITION_2_FAILED";
    case ErrorCode::KOutOfRange: return "K_OUT_OF_RANGE";
    case ErrorCode::InvalidFan: return "INVALID_FAN";
    case ErrorCode::NotSmooth: return "NOT_SMOOTH";
    case ErrorCode::RLimitExceeded: return "R_LIMIT_EXCEEDED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

}  // namespace torickit
