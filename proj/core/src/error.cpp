#include "amdesign/error.hpp"

namespace amdesign {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::EmptyWeight: return "EmptyWeight";
        case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::WrongCase: return "WrongCase";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorKind::MalformedHeader: return "MalformedHeader";
        case ErrorKind::MalformedRow: return "MalformedRow";
        case ErrorKind::BadDigit: return "BadDigit";
        case ErrorKind::RankDeficient: return "RankDeficient";
    }
    return "Unknown";
}

}  // namespace amdesign
