// qubit.hpp: density matrices, Bloch vectors and the normalized Pauli basis

#pragma once

#include <array>
#include <random>

#include "nmswitch/core/matrix.hpp"
#include "nmswitch/core/tolerances.hpp"

namespace nmswitch {

/// Hermitian, unit-trace, positive semidefinite 2x2 or 4x4 matrix.
/// Only constructible through a validating factory.
class DensityMatrix {
public:
    /// Throws NotHermitian / NotDensityMatrix / UnsupportedDimension.
    static DensityMatrix from_matrix(ComplexMatrix m, double tol = kConstructionTolerance);

    /// Projector |psi><psi| for a normalized 2- or 4-component ket.
    static DensityMatrix pure(std::span<const Complex> ket);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.rows(); }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

struct BlochVector {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    /// Throws BlochOutOfBall when |v| > 1 + 1e-12.
    static BlochVector make(double x, double y, double z);

    double norm() const;
};

DensityMatrix density_from_bloch(const BlochVector& v);
BlochVector bloch_from_density(const DensityMatrix& rho);

/// 1/2 * ||a - b||_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// {I, sigma_x, sigma_y, sigma_z}
const std::array<ComplexMatrix, 4>& pauli_matrices();
/// Normalized basis {I, sigma_x, sigma_y, sigma_z} / sqrt(2); Tr[G_i G_j] = delta_ij.
const std::array<ComplexMatrix, 4>& pauli_basis();

/// Uniform in the unit ball (rejection sampling).
BlochVector random_bloch(std::mt19937_64& rng);
/// Uniform on the unit sphere.
BlochVector random_pure_bloch(std::mt19937_64& rng);

} // namespace nmswitch
