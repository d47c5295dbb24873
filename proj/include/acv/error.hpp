#pragma once

#include <stdexcept>
#include <string>

namespace acv {

enum class ErrorCode {
    DimensionMismatch,
    NotSquare,
    NonSplitSpectrum,
    SpaceMismatch,
    NotOnVariety,
    NotRegular,
    NoSolution,
    NotRegularCartan,
    RankTooHigh,
    NotFound,
    NotCommonEigenvector,
    NotCommuting,
    NotSemisimple,
    UnknownSuite,
    InvalidConfig,
    ParseError,
    SchemaError,
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonSplitSpectrum: return "NonSplitSpectrum";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotOnVariety: return "NotOnVariety";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotRegularCartan: return "NotRegularCartan";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotCommonEigenvector: return "NotCommonEigenvector";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace acv
