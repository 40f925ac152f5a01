// eigen.hpp: Hermitian eigensolvers for 2x2 and 4x4 operators

#pragma once

#include <vector>

#include "nmswitch/core/matrix.hpp"

namespace nmswitch {

struct HermitianEigen {
    std::vector<double> values; // descending
    ComplexMatrix vectors;      // column k belongs to values[k]
};

/// Cyclic complex Jacobi rotations, capped at kJacobiMaxSweeps sweeps.
/// Throws NotHermitian / UnsupportedDimension.
HermitianEigen eigen_hermitian(const ComplexMatrix& m);

/// Eigenvalues in descending order. 2x2 uses the closed form, 4x4 Jacobi.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& m);

inline constexpr int kJacobiMaxSweeps = 50;

} // namespace nmswitch
