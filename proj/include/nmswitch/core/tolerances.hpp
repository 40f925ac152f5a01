#pragma once

namespace nmswitch {

// Gate applied to hand-built states (Hermiticity, trace, positivity).
inline constexpr double kConstructionTolerance = 1e-12;
// Gate applied to states produced by channel evolution.
inline constexpr double kEvolutionTolerance = 1e-10;
// Hermiticity precondition for eigensolvers.
inline constexpr double kHermitianInputTolerance = 1e-10;

} // namespace nmswitch
