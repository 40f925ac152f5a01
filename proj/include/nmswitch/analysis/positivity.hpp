// positivity.hpp: positivity of the infinitesimal map (I + eps L_t) on pure
// states, and the per-axis growth conditions of the Bloch difference vector.

#pragma once

#include "nmswitch/analysis/generator.hpp"
#include "nmswitch/core/matrix.hpp"

namespace nmswitch {

struct InfinitesimalOutput {
    ComplexMatrix output; // (I + eps L)(|phi><phi|)
    double determinant;   // expanded closed form, see infinitesimal_determinant
};

/// Requires |phi1|^2 + |phi2|^2 = 1 (BadState) and eps * max|G_i| < 0.01.
InfinitesimalOutput infinitesimal_map_output(const LindbladRates& rates, double epsilon, Complex phi1, Complex phi2);

/// det (I + eps L)(|phi><phi|) in expanded form:
///   s(1 - s)(|p1|^2 - |p2|^2)^2 + |p1|^2|p2|^2 (1 - (1 - 2 eps (G2 + G3))^2)
///   + 4 eps (G1 - G2)(1 - eps (G1 + G2 + 2 G3)) (|p1|^2|p2|^2 - Re(p1 p2*)^2)
/// with s = eps (G1 + G2).
double infinitesimal_determinant(const LindbladRates& rates, double epsilon, Complex phi1, Complex phi2);

/// Growth of the Bloch difference components a_k over an infinitesimal step:
/// a1 grows iff G2 + G3 < 0, a2 iff G1 + G3 < 0, a3 iff G1 + G2 < 0.
struct GrowthFlags {
    bool x{false};
    bool y{false};
    bool z{false};
};

GrowthFlags growth_condition(const LindbladRates& rates);

} // namespace nmswitch
