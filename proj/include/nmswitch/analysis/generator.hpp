// generator.hpp: time-local generators L = dF/dt F^{-1} and canonical rates
//
// For a Pauli channel in the normalized Pauli basis the generator is
// diagonal with
//   L_xx = -2 (G2 + G3),  L_yy = -2 (G1 + G3),  L_zz = -2 (G1 + G2)
// for the master equation  d/dt rho = sum_i G_i (sigma_i rho sigma_i - rho).

#pragma once

#include <span>
#include <vector>

#include "nmswitch/analysis/families.hpp"
#include "nmswitch/channels/transfer.hpp"

namespace nmswitch {

struct LindbladRates {
    double g1{0.0};
    double g2{0.0};
    double g3{0.0};
};

struct GeneratorSample {
    double t{0.0};
    RealMatrix4 L;
    LindbladRates rates; // meaningless when pole is set
    bool pole{false};
};

/// Half-width around a family's singular time inside which samples are
/// flagged as poles.
inline constexpr double kPoleExclusionRadius = 0.02;

struct GeneratorOptions {
    double h{1e-5};
    double det_floor{1e-8};
    double cond_ceiling{1e10};
    double pole_radius{kPoleExclusionRadius};
};

/// Inverts the Pauli-channel relation above. Reduces to
/// G1 = G2 = -L_zz / 4, G3 = L_zz / 4 - L_xx / 2 when L_xx = L_yy.
LindbladRates rates_from_generator(const RealMatrix4& L);

/// The diagonal generator of the given canonical rates.
RealMatrix4 generator_from_rates(const LindbladRates& rates);

TransferMatrix sample_transfer(const ChannelFamily& family, double t);

/// (F(t + h) - F(t - h)) / 2h
RealMatrix4 central_difference(const ChannelFamily& family, double t, double h);

/// Numerical generator of a qubit family. Requires t >= h > 0. A singular
/// transfer matrix is reported through the pole flag.
GeneratorSample extract_generator(const ChannelFamily& family, double t, const GeneratorOptions& options = {});

std::vector<GeneratorSample> extract_generator_grid(const ChannelFamily& family, std::span<const double> grid,
                                                    const GeneratorOptions& options = {});

/// Canonical rates of the switched dynamics from exact derivatives of A, B.
/// Throws PoleAtCharacteristicTime within 1e-9 of t*.
GeneratorSample closed_form_switched_rates(double t);

} // namespace nmswitch
