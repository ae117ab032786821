#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotdef {

enum class ErrorCode {
    NotSymmetric,
    NotSquare,
    OddDimension,
    NotUnimodularIntersection,
    InvalidSeifertMatrix,
    EmptyWord,
    IndexOutOfRange,
    MissingGenerator,
    NotAKnot,
    ParseError,
    BadPeriod,
    CurveMeetsAxis,
    CurveNotClosed,
    CurvesIntersect,
    NoConvergence,
    Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace knotdef
