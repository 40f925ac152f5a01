#include "nmswitch/core/qubit.hpp"

#include <cmath>
#include <string>

#include "nmswitch/core/eigen.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch {

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, double tol)
{
    if (!m.is_square() || (m.rows() != 2 && m.rows() != 4)) {
        throw Error(ErrorCode::UnsupportedDimension, "density matrices are 2x2 or 4x4");
    }
    if (!is_hermitian(m, tol)) {
        throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
        throw Error(ErrorCode::NotDensityMatrix,
                    "trace " + std::to_string(tr.real()) + " differs from 1");
    }
    const auto ev = eigenvalues_hermitian(m);
    if (ev.back() < -tol) {
        throw Error(ErrorCode::NotDensityMatrix,
                    "negative eigenvalue " + std::to_string(ev.back()));
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> ket)
{
    const std::size_t n = ket.size();
    if (n != 2 && n != 4) {
        throw Error(ErrorCode::UnsupportedDimension, "kets have 2 or 4 components");
    }
    double norm = 0.0;
    for (const auto& a : ket) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kConstructionTolerance) {
        throw Error(ErrorCode::BadState, "ket is not normalized");
    }
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = ket[r] * std::conj(ket[c]);
    }
    return from_matrix(std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b)
{
    return DensityMatrix::from_matrix(kron(a.matrix(), b.matrix()), kEvolutionTolerance);
}

BlochVector BlochVector::make(double x, double y, double z)
{
    const BlochVector v{x, y, z};
    if (v.norm() > 1.0 + kConstructionTolerance) {
        throw Error(ErrorCode::BlochOutOfBall, "Bloch vector norm " + std::to_string(v.norm()) + " exceeds 1");
    }
    return v;
}

double BlochVector::norm() const
{
    return std::sqrt(x * x + y * y + z * z);
}

DensityMatrix density_from_bloch(const BlochVector& v)
{
    if (v.norm() > 1.0 + kConstructionTolerance) {
        throw Error(ErrorCode::BlochOutOfBall, "Bloch vector outside the unit ball");
    }
    ComplexMatrix m{{0.5 * (1.0 + v.z), Complex{0.5 * v.x, -0.5 * v.y}},
                    {Complex{0.5 * v.x, 0.5 * v.y}, 0.5 * (1.0 - v.z)}};
    return DensityMatrix::from_matrix(std::move(m));
}

BlochVector bloch_from_density(const DensityMatrix& rho)
{
    if (rho.dim() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "Bloch vectors describe single qubits");
    }
    const auto& m = rho.matrix();
    // t_k = Tr[rho sigma_k]
    return BlochVector{2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b)
{
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "trace_distance: states of different dimension");
    }
    return 0.5 * trace_norm_hermitian(a.matrix() - b.matrix());
}

const std::array<ComplexMatrix, 4>& pauli_matrices()
{
    static const std::array<ComplexMatrix, 4> paulis = {
        ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return paulis;
}

const std::array<ComplexMatrix, 4>& pauli_basis()
{
    static const std::array<ComplexMatrix, 4> basis = [] {
        std::array<ComplexMatrix, 4> out;
        const double k = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < 4; ++i) out[i] = k * pauli_matrices()[i];
        return out;
    }();
    return basis;
}

BlochVector random_bloch(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const BlochVector v{u(rng), u(rng), u(rng)};
        if (v.norm() <= 1.0) return v;
    }
}

BlochVector random_pure_bloch(std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        BlochVector v{g(rng), g(rng), g(rng)};
        const double n = v.norm();
        if (n < 1e-12) continue;
        v.x /= n;
        v.y /= n;
        v.z /= n;
        return v;
    }
}

} // namespace nmswitch
