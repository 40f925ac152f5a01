#include "nmswitch/core/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "nmswitch/core/tolerances.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch {

namespace {

void require_supported(const ComplexMatrix& m)
{
    if (!m.is_square() || (m.rows() != 2 && m.rows() != 4)) {
        throw Error(ErrorCode::UnsupportedDimension, "Hermitian eigensolver supports 2x2 and 4x4 only");
    }
    if (!is_hermitian(m, kHermitianInputTolerance)) {
        throw Error(ErrorCode::NotHermitian, "eigensolver input is not Hermitian within 1e-10");
    }
}

double off_diagonal_norm(const ComplexMatrix& a)
{
    double acc = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) acc += std::norm(a(r, c));
        }
    }
    return std::sqrt(acc);
}

double frobenius(const ComplexMatrix& a)
{
    double acc = 0.0;
    for (const auto& v : a.entries()) acc += std::norm(v);
    return std::sqrt(acc);
}

// One complex Jacobi rotation on the (p, q) plane: A <- U^dagger A U, V <- V U.
// U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) block.
void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q)
{
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex phase = apq / r; // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * std::conj(phase);
    const Complex uqq = c * std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, p) = Complex{app - t * r, 0.0};
    a(q, q) = Complex{aqq + t * r, 0.0};
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    if (!v) return;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = (*v)(k, p);
        const Complex vkq = (*v)(k, q);
        (*v)(k, p) = vkp * upp + vkq * uqp;
        (*v)(k, q) = vkp * upq + vkq * uqq;
    }
}

// Diagonalizes a in place; accumulates eigenvectors into v when given.
void jacobi_sweeps(ComplexMatrix& a, ComplexMatrix* v)
{
    const std::size_t n = a.rows();
    // Symmetrize so rounding-level anti-Hermitian parts do not steer rotations.
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = Complex{a(r, r).real(), 0.0};
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    const double scale = frobenius(a);
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= std::numeric_limits<double>::epsilon() * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        }
    }
}

HermitianEigen jacobi(ComplexMatrix a)
{
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_sweeps(a, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

} // namespace

HermitianEigen eigen_hermitian(const ComplexMatrix& m)
{
    require_supported(m);
    return jacobi(m);
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m)
{
    require_supported(m);
    if (m.rows() == 2) {
        const double a = m(0, 0).real();
        const double d = m(1, 1).real();
        const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
        const double mean = 0.5 * (a + d);
        const double radius = std::hypot(0.5 * (a - d), std::abs(b));
        return {mean + radius, mean - radius};
    }
    ComplexMatrix a = m;
    jacobi_sweeps(a, nullptr);
    std::vector<double> values(a.rows());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = a(k, k).real();
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

double trace_norm_hermitian(const ComplexMatrix& m)
{
    double acc = 0.0;
    for (double lambda : eigenvalues_hermitian(m)) acc += std::abs(lambda);
    return acc;
}

} // namespace nmswitch
