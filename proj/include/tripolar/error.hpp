#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tripolar {

enum class ErrorKind {
    InvalidGrid,
    NonFinite,
    GridMismatch,
    NonPositiveSigma,
    MalformedCsv,
    OutOfSpan,
    NegativeRealPart,
    DivisorRealZero,
    SquareMismatch,
    PolarizationFailure,
    SingularDivisor,
    NoPositivePeak,
    SyntaxError,
    MalformedJson,
    Io,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::InvalidGrid: return "InvalidGrid";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::GridMismatch: return "GridMismatch";
        case ErrorKind::NonPositiveSigma: return "NonPositiveSigma";
        case ErrorKind::MalformedCsv: return "MalformedCsv";
        case ErrorKind::OutOfSpan: return "OutOfSpan";
        case ErrorKind::NegativeRealPart: return "NegativeRealPart";
        case ErrorKind::DivisorRealZero: return "DivisorRealZero";
        case ErrorKind::SquareMismatch: return "SquareMismatch";
        case ErrorKind::PolarizationFailure: return "PolarizationFailure";
        case ErrorKind::SingularDivisor: return "SingularDivisor";
        case ErrorKind::NoPositivePeak: return "NoPositivePeak";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::MalformedJson: return "MalformedJson";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this exception; `kind()`
/// is the stable machine-readable part, `what()` carries the detail.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace tripolar
