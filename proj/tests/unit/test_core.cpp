#include <cmath>
#include <random>

#include "doctest.h"
#include "nmswitch/core/eigen.hpp"
#include "nmswitch/core/matrix.hpp"
#include "nmswitch/core/qubit.hpp"
#include "nmswitch/errors.hpp"

using namespace nmswitch;

namespace {

bool throws_code(ErrorCode code, auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("matrix algebra")
{
    const ComplexMatrix a{{1.0, Complex{0, 2}}, {3.0, 4.0}};
    const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
    const ComplexMatrix ab = a * b;
    CHECK(ab(0, 0) == Complex{0, 2});
    CHECK(ab(1, 1) == Complex{3, 0});
    CHECK(dagger(a)(0, 1) == Complex{3, 0});
    CHECK(dagger(a)(1, 0) == Complex{0, -2});
    CHECK(a.trace() == Complex{5, 0});

    const ComplexMatrix k = kron(a, ComplexMatrix::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k(1, 3) == Complex{0, 2});
    CHECK(k(2, 0) == Complex{3, 0});
    CHECK(k(2, 1) == Complex{0, 0});

    ComplexMatrix acc = ComplexMatrix::zeros(2, 2);
    add_sandwich(acc, a, b);
    CHECK(max_abs_diff(acc, a * b * dagger(a)) == 0.0);

    CHECK_THROWS_AS(a * ComplexMatrix::identity(4), Error);
    CHECK_FALSE(is_hermitian(a, 1e-12));
    CHECK(is_hermitian(b, 0.0));
}

TEST_CASE("real 4x4 determinant, inverse and conditioning")
{
    RealMatrix4 m = RealMatrix4::diagonal(1.0, 2.0, 4.0, 0.5);
    m(0, 3) = 3.0;
    m(2, 1) = -1.0;
    CHECK(m.determinant() == doctest::Approx(4.0).epsilon(1e-14));
    const auto inv = m.inverse();
    REQUIRE(inv);
    CHECK(max_abs_diff(m * *inv, RealMatrix4::identity()) < 1e-14);

    CHECK(RealMatrix4::diagonal(1.0, 1e-3, 1.0, 1.0).condition_number() == doctest::Approx(1e3));
    const RealMatrix4 singular = RealMatrix4::diagonal(1.0, 1.0, 0.0, 1.0);
    CHECK_FALSE(singular.inverse());
    CHECK(std::isinf(singular.condition_number()));
    CHECK(m.transpose()(3, 0) == 3.0);
}

TEST_CASE("Hermitian eigensolver")
{
    SUBCASE("2x2 closed form")
    {
        const ComplexMatrix m{{2.0, Complex{0, 1}}, {Complex{0, -1}, 2.0}};
        const auto v = eigenvalues_hermitian(m);
        CHECK(v[0] == doctest::Approx(3.0));
        CHECK(v[1] == doctest::Approx(1.0));
    }
    SUBCASE("4x4 against a known spectrum")
    {
        // U diag(3, 1, -0.5, -2) U^dagger with U a kron of two rotations
        const Complex i{0, 1};
        const double c = std::cos(0.7), s = std::sin(0.7);
        const ComplexMatrix u1{{c, i * s}, {i * s, c}};
        const ComplexMatrix u2{{c, -s}, {s, c}};
        const ComplexMatrix u = kron(u1, u2);
        const ComplexMatrix m = u * ComplexMatrix::diagonal({3.0, 1.0, -0.5, -2.0}) * dagger(u);
        const HermitianEigen e = eigen_hermitian(m);
        CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-13));
        CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(e.values[2] == doctest::Approx(-0.5).epsilon(1e-13));
        CHECK(e.values[3] == doctest::Approx(-2.0).epsilon(1e-13));
        const ComplexMatrix rebuilt = e.vectors *
                                      ComplexMatrix::diagonal({e.values[0], e.values[1], e.values[2], e.values[3]}) *
                                      dagger(e.vectors);
        CHECK(max_abs_diff(rebuilt, m) < 1e-13);
        CHECK(trace_norm_hermitian(m) == doctest::Approx(6.5));
    }
    SUBCASE("degenerate spectrum")
    {
        const auto v = eigenvalues_hermitian(ComplexMatrix::identity(4));
        for (double x : v) CHECK(x == 1.0);
    }
    SUBCASE("input checks")
    {
        CHECK(throws_code(ErrorCode::NotHermitian, [] { eigenvalues_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); }));
        CHECK(throws_code(ErrorCode::UnsupportedDimension, [] { eigenvalues_hermitian(ComplexMatrix::identity(3)); }));
    }
}

TEST_CASE("density matrix validation")
{
    CHECK(throws_code(ErrorCode::NotDensityMatrix,
                      [] { DensityMatrix::from_matrix(ComplexMatrix::diagonal({1.2, -0.2})); }));
    CHECK(throws_code(ErrorCode::NotDensityMatrix,
                      [] { DensityMatrix::from_matrix(ComplexMatrix::diagonal({0.5, 0.6})); }));
    CHECK(throws_code(ErrorCode::NotHermitian,
                      [] { DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}); }));
    CHECK(throws_code(ErrorCode::UnsupportedDimension,
                      [] { DensityMatrix::from_matrix(ComplexMatrix::diagonal({0.5, 0.25, 0.25})); }));

    const Complex ket[] = {1.0 / std::sqrt(2.0), Complex{0, 1.0 / std::sqrt(2.0)}};
    const DensityMatrix plus_i = DensityMatrix::pure(ket);
    const BlochVector b = bloch_from_density(plus_i);
    CHECK(b.x == doctest::Approx(0.0));
    CHECK(b.y == doctest::Approx(1.0));
    CHECK(b.z == doctest::Approx(0.0));
    CHECK(throws_code(ErrorCode::BadState, [] {
        const Complex bad[] = {1.0, 1.0};
        DensityMatrix::pure(bad);
    }));
}

TEST_CASE("Bloch vectors")
{
    CHECK(throws_code(ErrorCode::BlochOutOfBall, [] { BlochVector::make(1.0, 0.1, 0.0); }));
    CHECK_NOTHROW(BlochVector::make(0.0, 0.0, -1.0));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const BlochVector v = random_bloch(rng);
        CHECK(v.norm() <= 1.0);
        const BlochVector back = bloch_from_density(density_from_bloch(v));
        CHECK(std::abs(back.x - v.x) + std::abs(back.y - v.y) + std::abs(back.z - v.z) < 1e-15);
        CHECK(random_pure_bloch(rng).norm() == doctest::Approx(1.0));
    }
}

TEST_CASE("trace distance is half the Euclidean Bloch distance")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const BlochVector a = random_bloch(rng);
        const BlochVector b = random_bloch(rng);
        const double d = std::hypot(a.x - b.x, a.y - b.y, a.z - b.z) / 2.0;
        CHECK(trace_distance(density_from_bloch(a), density_from_bloch(b)) == doctest::Approx(d).epsilon(1e-13));
    }
    const DensityMatrix up = density_from_bloch({0, 0, 1});
    const DensityMatrix down = density_from_bloch({0, 0, -1});
    CHECK(trace_distance(up, down) == doctest::Approx(1.0));
    CHECK(trace_distance(tensor(up, up), tensor(down, down)) == doctest::Approx(1.0));
    CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { trace_distance(up, tensor(up, up)); }));
}

TEST_CASE("normalized Pauli basis is orthonormal")
{
    const auto& g = pauli_basis();
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            const Complex ip = (dagger(g[m]) * g[n]).trace();
            CHECK(std::abs(ip - (m == n ? 1.0 : 0.0)) < 1e-15);
        }
    }
}

TEST_CASE("error messages carry the code name")
{
    const Error e(ErrorCode::PoleAtCharacteristicTime, "x");
    CHECK(std::string(e.what()).find("PoleAtCharacteristicTime") != std::string::npos);
}
