#include "nmswitch/core/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nmswitch/core/eigen.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0})
{
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch, "entry count does not equal rows*cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::DimensionMismatch, "ragged initializer list");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols)
{
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> values)
{
    ComplexMatrix m(values.size(), values.size());
    std::size_t i = 0;
    for (const auto& v : values) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

Complex ComplexMatrix::trace() const
{
    Complex acc{0.0, 0.0};
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) acc += (*this)(i, i);
    return acc;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar)
{
    for (auto& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& m)
{
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

void add_sandwich(ComplexMatrix& out, const ComplexMatrix& a, const ComplexMatrix& x)
{
    if (a.cols() != x.rows() || x.cols() != a.cols() || out.rows() != a.rows() ||
        out.cols() != a.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "add_sandwich: incompatible shapes");
    }
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    // tmp = a * x
    std::vector<Complex> tmp(n * m, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < m; ++j) tmp[i * m + j] += aik * x(k, j);
        }
    }
    // out += tmp * a^dagger
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < m; ++k) acc += tmp[i * m + k] * std::conj(a(j, k));
            out(i, j) += acc;
        }
    }
}

double max_abs(const ComplexMatrix& m)
{
    double best = 0.0;
    for (const auto& v : m.entries()) best = std::max(best, std::abs(v));
    return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_shape(a, b, "max_abs_diff");
    double best = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return best;
}

bool is_hermitian(const ComplexMatrix& m, double tol)
{
    if (!m.is_square()) return false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// RealMatrix4

RealMatrix4 RealMatrix4::identity()
{
    return diagonal(1.0, 1.0, 1.0, 1.0);
}

RealMatrix4 RealMatrix4::diagonal(double d0, double d1, double d2, double d3)
{
    RealMatrix4 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
}

double RealMatrix4::determinant() const
{
    std::array<double, 16> a = a_;
    double det = 1.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; ++r) {
            if (std::abs(a[r * 4 + col]) > std::abs(a[pivot * 4 + col])) pivot = r;
        }
        if (a[pivot * 4 + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < 4; ++c) std::swap(a[pivot * 4 + c], a[col * 4 + c]);
            det = -det;
        }
        const double p = a[col * 4 + col];
        det *= p;
        for (std::size_t r = col + 1; r < 4; ++r) {
            const double f = a[r * 4 + col] / p;
            for (std::size_t c = col; c < 4; ++c) a[r * 4 + c] -= f * a[col * 4 + c];
        }
    }
    return det;
}

std::optional<RealMatrix4> RealMatrix4::inverse() const
{
    std::array<double, 16> a = a_;
    RealMatrix4 inv = identity();
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; ++r) {
            if (std::abs(a[r * 4 + col]) > std::abs(a[pivot * 4 + col])) pivot = r;
        }
        if (a[pivot * 4 + col] == 0.0) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c < 4; ++c) {
                std::swap(a[pivot * 4 + c], a[col * 4 + c]);
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const double p = a[col * 4 + col];
        for (std::size_t c = 0; c < 4; ++c) {
            a[col * 4 + c] /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = a[r * 4 + col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < 4; ++c) {
                a[r * 4 + c] -= f * a[col * 4 + c];
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

double RealMatrix4::condition_number() const
{
    const RealMatrix4 gram = transpose() * (*this);
    ComplexMatrix g(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) g(r, c) = gram(r, c);
    }
    const auto ev = eigenvalues_hermitian(g);
    const double hi = std::max(ev.front(), 0.0);
    const double lo = std::max(ev.back(), 0.0);
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(hi / lo);
}

RealMatrix4 RealMatrix4::transpose() const
{
    RealMatrix4 t;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

RealMatrix4& RealMatrix4::operator+=(const RealMatrix4& o)
{
    for (std::size_t i = 0; i < 16; ++i) a_[i] += o.a_[i];
    return *this;
}

RealMatrix4& RealMatrix4::operator-=(const RealMatrix4& o)
{
    for (std::size_t i = 0; i < 16; ++i) a_[i] -= o.a_[i];
    return *this;
}

RealMatrix4& RealMatrix4::operator*=(double s)
{
    for (auto& v : a_) v *= s;
    return *this;
}

RealMatrix4 operator*(const RealMatrix4& a, const RealMatrix4& b)
{
    RealMatrix4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

RealMatrix4 operator+(RealMatrix4 a, const RealMatrix4& b) { return a += b; }
RealMatrix4 operator-(RealMatrix4 a, const RealMatrix4& b) { return a -= b; }
RealMatrix4 operator*(double s, RealMatrix4 m) { return m *= s; }

double max_abs(const RealMatrix4& m)
{
    double best = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) best = std::max(best, std::abs(m(r, c)));
    }
    return best;
}

double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b)
{
    return max_abs(a - b);
}

} // namespace nmswitch
