// eternal.hpp: the eternally non-Markovian qubit dynamics
//
// Master equation  d/dt rho = sum_i gamma_i(t)/2 (sigma_i rho sigma_i - rho)
// with gamma_1 = gamma_2 = 1 and gamma_3(t) = -tanh t. Rate integrals are
// closed form: xi_1 = t, xi_2 = t - ln cosh t.

#pragma once

#include "nmswitch/channels/kraus_channel.hpp"

namespace nmswitch {

struct EternalAmplitudes {
    double a1; // (1 + e^{-2t}) / 2
    double a2; // (1 - e^{-2t}) / 2
    double a3; // e^{-t} cosh t
};

double eternal_xi1(double t);
double eternal_xi2(double t);
EternalAmplitudes eternal_amplitudes(double t);

/// Rates gamma_i(t) of the master equation (not halved).
struct EternalRates {
    double gamma1;
    double gamma2;
    double gamma3;
};
EternalRates eternal_rates(double t);

/// K1 = sqrt(A2) sigma_+, K2 = sqrt(A2) sigma_-, K3 = sqrt((A1+A3)/2) I,
/// K4 = sqrt((A1-A3)/2) diag(-1, 1). Throws NegativeTime.
KrausChannel eternal_channel(double t);

/// Reference Bloch contraction factors (x, y, z) read off the populations
/// and coherences: (e^{-xi2}, e^{-xi2}, e^{-2 xi1}).
BlochFactors eternal_bloch_factors(double t);

} // namespace nmswitch
