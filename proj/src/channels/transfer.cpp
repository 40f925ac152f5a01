#include "nmswitch/channels/transfer.hpp"

#include <cmath>

#include "nmswitch/core/eigen.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch {

namespace {

// |i><j| on a qubit.
ComplexMatrix unit(std::size_t i, std::size_t j)
{
    ComplexMatrix e(2, 2);
    e(i, j) = 1.0;
    return e;
}

template <typename Action>
ComplexMatrix choi_from_action(Action&& action)
{
    ComplexMatrix choi(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            choi += kron(unit(i, j), action(unit(i, j)));
        }
    }
    choi *= 0.5;
    return choi;
}

} // namespace

RealMatrix4 transfer_matrix(const KrausChannel& ch)
{
    if (ch.dim() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "transfer matrices are defined for qubit channels");
    }
    const auto& g = pauli_basis();
    RealMatrix4 f;
    for (std::size_t n = 0; n < 4; ++n) {
        const ComplexMatrix out = apply_linear(ch, g[n]);
        for (std::size_t m = 0; m < 4; ++m) {
            const Complex v = (g[m] * out).trace();
            if (std::abs(v.imag()) >= kComplexResidueTolerance) {
                throw Error(ErrorCode::ComplexResidue, "transfer matrix entry has an imaginary part");
            }
            f(m, n) = v.real();
        }
    }
    return f;
}

ComplexMatrix apply_transfer(const RealMatrix4& F, const ComplexMatrix& x)
{
    if (x.rows() != 2 || x.cols() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "transfer matrices act on 2x2 operators");
    }
    const auto& g = pauli_basis();
    std::array<Complex, 4> r{};
    for (std::size_t n = 0; n < 4; ++n) r[n] = (g[n] * x).trace();
    ComplexMatrix out(2, 2);
    for (std::size_t m = 0; m < 4; ++m) {
        Complex coeff{0.0, 0.0};
        for (std::size_t n = 0; n < 4; ++n) coeff += F(m, n) * r[n];
        out += coeff * g[m];
    }
    return out;
}

ComplexMatrix choi_matrix(const KrausChannel& ch)
{
    if (ch.dim() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "Choi matrices are built for qubit channels");
    }
    return choi_from_action([&](const ComplexMatrix& x) { return apply_raw(ch, x); });
}

ComplexMatrix choi_matrix(const RealMatrix4& F)
{
    return choi_from_action([&](const ComplexMatrix& x) { return apply_transfer(F, x); });
}

bool is_cptp(const KrausChannel& ch)
{
    if (std::abs(ch.trace_scale() - 1.0) > kCompletenessTolerance) return false;
    if (completeness_defect(ch) > kCompletenessTolerance) return false;
    return eigenvalues_hermitian(choi_matrix(ch)).back() >= -kChoiTolerance;
}

bool is_cptp(const RealMatrix4& F)
{
    if (std::abs(F(0, 0) - 1.0) > kCompletenessTolerance) return false;
    for (std::size_t n = 1; n < 4; ++n) {
        if (std::abs(F(0, n)) > kCompletenessTolerance) return false;
    }
    return eigenvalues_hermitian(choi_matrix(F)).back() >= -kChoiTolerance;
}

} // namespace nmswitch
