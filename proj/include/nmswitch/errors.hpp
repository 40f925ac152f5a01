// errors.hpp: error codes shared by every nmswitch module

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nmswitch {

enum class ErrorCode {
    InvalidArgument,
    NotHermitian,
    NotDensityMatrix,
    BlochOutOfBall,
    NegativeTime,
    DimensionMismatch,
    UnsupportedDimension,
    IncompleteKraus,
    BadWeights,
    ComplexResidue,
    ZeroProbabilityBranch,
    NonUniformBranch,
    PoleAtCharacteristicTime,
    BadState,
    NoSolution,
    DegenerateInitialPair,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace nmswitch
