#pragma once

#include <stdexcept>
#include <string>

namespace rfkit {

enum class ErrorCode {
    // parsing / serialization
    SyntaxError,
    UnsupportedFormat,
    NonMonotonicFrequency,
    EmptySweep,
    IoError,
    // numeric domain
    SingularPoint,
    OutOfRange,
    DegenerateDenominator,
    DegenerateCircle,
    SingularTermination,
    ActiveMismatch,
    UnreachableGain,
    ConditionallyStable,
    UnilateralDevice,
    InvalidSource,
    BelowMinimum,
    UndefinedParameter,
    EmptyCascade,
    // design / synthesis
    NotUnconditionallyStable,
    InfeasibleSpec,
    NoStableLoad,
    UnreachableTarget,
    ComplexTarget,
    OutOfModelRange,
    DuplicateLabel,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rfkit
