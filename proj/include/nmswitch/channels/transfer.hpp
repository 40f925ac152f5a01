// transfer.hpp: Pauli transfer matrices and Choi-Jamiolkowski checks

#pragma once

#include "nmswitch/channels/kraus_channel.hpp"
#include "nmswitch/core/matrix.hpp"

namespace nmswitch {

/// F_mn = Tr[G_m Omega[G_n]] at time t, G the normalized Pauli basis.
struct TransferMatrix {
    double t{0.0};
    RealMatrix4 F;
};

inline constexpr double kComplexResidueTolerance = 1e-12;

/// Transfer matrix of the normalized action of a qubit channel.
/// Throws UnsupportedDimension / ComplexResidue.
RealMatrix4 transfer_matrix(const KrausChannel& ch);

/// Linear map X -> sum_mn F_mn Tr[G_n X] G_m.
ComplexMatrix apply_transfer(const RealMatrix4& F, const ComplexMatrix& x);

/// (I (x) Lambda)(|Phi+><Phi+|) with the raw (unnormalized) action, so the
/// trace equals trace_scale.
ComplexMatrix choi_matrix(const KrausChannel& ch);
/// Choi matrix of the map described by a transfer matrix; may be indefinite.
ComplexMatrix choi_matrix(const RealMatrix4& F);

inline constexpr double kChoiTolerance = 1e-10;

/// Completeness with trace_scale = 1 and a positive Choi matrix.
bool is_cptp(const KrausChannel& ch);
/// Positive Choi matrix and first row (1, 0, 0, 0).
bool is_cptp(const RealMatrix4& F);

} // namespace nmswitch
