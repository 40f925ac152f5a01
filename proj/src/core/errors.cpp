#include "nmswitch/errors.hpp"

namespace nmswitch {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::BlochOutOfBall: return "BlochOutOfBall";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::IncompleteKraus: return "IncompleteKraus";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::ComplexResidue: return "ComplexResidue";
    case ErrorCode::ZeroProbabilityBranch: return "ZeroProbabilityBranch";
    case ErrorCode::NonUniformBranch: return "NonUniformBranch";
    case ErrorCode::PoleAtCharacteristicTime: return "PoleAtCharacteristicTime";
    case ErrorCode::BadState: return "BadState";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DegenerateInitialPair: return "DegenerateInitialPair";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

} // namespace nmswitch
