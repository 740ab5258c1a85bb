#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amdesign {

enum class ErrorKind {
    InvalidArgument,
    BudgetExceeded,
    EmptyWeight,
    NonIntegerCoefficient,
    DimensionMismatch,
    SizeCapExceeded,
    NotApplicable,
    WrongCase,
    DegenerateDenominator,
    MalformedHeader,
    MalformedRow,
    BadDigit,
    RankDeficient,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Source position attached to parse errors (1-based).
struct SourceLocation {
    std::size_t line = 0;
    std::size_t column = 0;
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<SourceLocation> where = std::nullopt)
        : std::runtime_error(message), kind_(kind), where_(where) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<SourceLocation>& where() const noexcept { return where_; }

private:
    ErrorKind kind_;
    std::optional<SourceLocation> where_;
};

}  // namespace amdesign
