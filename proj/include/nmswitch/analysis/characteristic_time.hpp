// characteristic_time.hpp: earliest backflow time of the switched dynamics

#pragma once

#include "nmswitch/core/qubit.hpp"

namespace nmswitch {

/// chi0^2 = (a1(0)^2 + a2(0)^2) / a3(0)^2 for the Bloch difference a(0).
struct CharacteristicTimeQuery {
    double chi0{0.0};

    /// Throws DegenerateInitialPair when a3(0) = 0.
    static CharacteristicTimeQuery from_pair(const BlochVector& a, const BlochVector& b);
};

/// 1/2 ln(1 + 2 sqrt 2): the zero of A(t) - B(t).
double switched_pole_time();

/// Smallest t > 0 with e^t (A - B) / A = +chi0 or -chi0, found by bracketed
/// bisection on [0, 20]. Throws NoSolution / InvalidArgument.
double characteristic_time(const CharacteristicTimeQuery& query);

/// e^t (A(t) - B(t)) / A(t)
double characteristic_residual(double t);

} // namespace nmswitch
