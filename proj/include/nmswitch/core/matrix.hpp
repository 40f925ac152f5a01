// matrix.hpp: small dense complex and real matrices (qubit and two-qubit sizes)

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace nmswitch {

using Complex = std::complex<double>;

/// Row-major dense complex matrix. Operations in this library only ever
/// see 2x2 and 4x4 operators (plus 2x4 / 4x2 control projections), but the
/// storage itself is shape agnostic.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(std::initializer_list<Complex> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * x * dagger(a), accumulated into out.
void add_sandwich(ComplexMatrix& out, const ComplexMatrix& a, const ComplexMatrix& x);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol);

/// Real 4x4 matrix; holds transfer matrices F and generators L.
class RealMatrix4 {
public:
    RealMatrix4() { a_.fill(0.0); }

    static RealMatrix4 identity();
    static RealMatrix4 diagonal(double d0, double d1, double d2, double d3);

    double& operator()(std::size_t r, std::size_t c) { return a_[r * 4 + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * 4 + c]; }

    double determinant() const;
    /// Gauss-Jordan with partial pivoting; nullopt when a pivot vanishes.
    std::optional<RealMatrix4> inverse() const;
    /// Ratio of extreme singular values; +inf for a singular matrix.
    double condition_number() const;
    RealMatrix4 transpose() const;

    RealMatrix4& operator+=(const RealMatrix4& o);
    RealMatrix4& operator-=(const RealMatrix4& o);
    RealMatrix4& operator*=(double s);

private:
    std::array<double, 16> a_;
};

RealMatrix4 operator*(const RealMatrix4& a, const RealMatrix4& b);
RealMatrix4 operator+(RealMatrix4 a, const RealMatrix4& b);
RealMatrix4 operator-(RealMatrix4 a, const RealMatrix4& b);
RealMatrix4 operator*(double s, RealMatrix4 m);
double max_abs(const RealMatrix4& m);
double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b);

} // namespace nmswitch
