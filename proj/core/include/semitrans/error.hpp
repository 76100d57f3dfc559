#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semitrans {

enum class ErrorCode {
    BadParameter,
    NotConvex,
    NotPeriodic,
    NotClosed,
    NotSymmetric,
    TangentBreak,
    SingularPoint,
    NonSmoothPoint,
    NotPositiveDefinite,
    Degenerate,
    Singular,
    NotFlat,
    WrongModel,
    BadEps,
    OutOfDomain,
    TangencySolveFailed,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace semitrans
