#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "nmswitch/channels/eternal.hpp"
#include "nmswitch/channels/kraus_channel.hpp"
#include "nmswitch/channels/transfer.hpp"
#include "nmswitch/core/eigen.hpp"
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

DensityMatrix plus_state() { return density_from_bloch({1.0, 0.0, 0.0}); }

ComplexMatrix amplitude_damping(double g, int which)
{
    if (which == 0) return ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - g)}};
    return ComplexMatrix{{0.0, std::sqrt(g)}, {0.0, 0.0}};
}

} // namespace

TEST_CASE("eternal channel examples")
{
    SUBCASE("t = 0 is the identity")
    {
        const DensityMatrix rho = density_from_bloch({0.3, -0.2, 0.5});
        CHECK(max_abs_diff(apply(eternal_channel(0.0), rho).matrix(), rho.matrix()) < 1e-15);
    }
    SUBCASE("diag(1, 0) at t = 0.5")
    {
        const DensityMatrix out = apply(eternal_channel(0.5), density_from_bloch({0, 0, 1}));
        CHECK(out(0, 0).real() == doctest::Approx(0.6839397205857212).epsilon(1e-15));
        CHECK(out(1, 1).real() == doctest::Approx(1.0 - 0.6839397205857212).epsilon(1e-15));
    }
    SUBCASE("|+> coherence at t = 1 is (1 + e^-2) / 4")
    {
        const DensityMatrix out = apply(eternal_channel(1.0), plus_state());
        CHECK(std::abs(out(0, 1) - 0.28383382080915317) < 1e-15);
    }
    SUBCASE("negative time")
    {
        CHECK(throws_code(ErrorCode::NegativeTime, [] { eternal_channel(-1e-3); }));
    }
}

TEST_CASE("eternal Kraus operators stay complete for large t")
{
    for (double t : {0.0, 1e-8, 0.3, 1.0, 7.0, 20.0, 40.0}) {
        const KrausChannel ch = eternal_channel(t);
        CHECK(ch.size() == 4);
        CHECK(completeness_defect(ch) < 1e-12);
        CHECK(is_cptp(ch));
    }
}

TEST_CASE("eternal rates and rate integrals")
{
    const EternalRates r = eternal_rates(0.8);
    CHECK(r.gamma1 == 1.0);
    CHECK(r.gamma2 == 1.0);
    CHECK(r.gamma3 == doctest::Approx(-std::tanh(0.8)));
    // xi2 = t - ln cosh t stays accurate where cosh overflows
    CHECK(eternal_xi2(1000.0) == doctest::Approx(std::log(2.0)));
    CHECK(eternal_xi1(2.5) == 2.5);
}

TEST_CASE("transfer matrix of the eternal channel")
{
    for (double t : {0.0, 0.4, 1.3, 3.0}) {
        const RealMatrix4 F = transfer_matrix(eternal_channel(t));
        const double lambda = 0.5 * (1.0 + std::exp(-2.0 * t));
        CHECK(max_abs_diff(F, RealMatrix4::diagonal(1.0, lambda, lambda, std::exp(-2.0 * t))) < 1e-14);
        const BlochFactors f = eternal_bloch_factors(t);
        CHECK(f.x == doctest::Approx(lambda).epsilon(1e-14));
        CHECK(f.z == doctest::Approx(std::exp(-2.0 * t)).epsilon(1e-14));
        CHECK(is_cptp(F));
    }
}

TEST_CASE("apply_transfer reproduces the Kraus action")
{
    std::mt19937_64 rng(3);
    const KrausChannel ch = eternal_channel(0.9);
    const RealMatrix4 F = transfer_matrix(ch);
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = density_from_bloch(random_bloch(rng));
        CHECK(max_abs_diff(apply_transfer(F, rho.matrix()), apply(ch, rho).matrix()) < 1e-14);
    }
}

TEST_CASE("Choi matrix")
{
    const ComplexMatrix j = choi_matrix(eternal_channel(0.6));
    CHECK(j.rows() == 4);
    CHECK(std::abs(j.trace() - 1.0) < 1e-14);
    CHECK(eigenvalues_hermitian(j).back() > -1e-12);

    // transpose map: positive but not completely positive
    RealMatrix4 transpose = RealMatrix4::diagonal(1.0, 1.0, -1.0, 1.0);
    CHECK_FALSE(is_cptp(transpose));
    CHECK(eigenvalues_hermitian(choi_matrix(transpose)).back() < -0.4);
    // the same Choi from both routes
    CHECK(max_abs_diff(choi_matrix(transfer_matrix(eternal_channel(0.6))), j) < 1e-14);
}

TEST_CASE("KrausChannel construction errors")
{
    CHECK(throws_code(ErrorCode::IncompleteKraus, [] { KrausChannel({ComplexMatrix::diagonal({1.0, 0.5})}); }));
    CHECK(throws_code(ErrorCode::InvalidArgument, [] { KrausChannel(std::vector<ComplexMatrix>{}); }));
    CHECK(throws_code(ErrorCode::DimensionMismatch,
                      [] { KrausChannel({ComplexMatrix::identity(2), ComplexMatrix::identity(4)}); }));
    CHECK(throws_code(ErrorCode::UnsupportedDimension, [] { KrausChannel({ComplexMatrix::identity(3)}); }));
    CHECK_NOTHROW(KrausChannel({amplitude_damping(0.3, 0), amplitude_damping(0.3, 1)}));
}

TEST_CASE("series and parallel composition")
{
    const KrausChannel n = eternal_channel(0.7);
    const KrausChannel twice = compose_series(n, n);
    CHECK(twice.size() == 16);
    CHECK(completeness_defect(twice) < 1e-12);
    const RealMatrix4 F = transfer_matrix(n);
    CHECK(max_abs_diff(transfer_matrix(twice), F * F) < 1e-14);

    // order matters for non-commuting channels
    const KrausChannel ad({amplitude_damping(0.4, 0), amplitude_damping(0.4, 1)});
    const KrausChannel flip({std::sqrt(0.5) * ComplexMatrix::identity(2),
                             std::sqrt(0.5) * ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}});
    const DensityMatrix up = density_from_bloch({0, 0, 1});
    const auto ab = apply(compose_series(ad, flip), plus_state());
    const auto ba = apply(compose_series(flip, ad), plus_state());
    CHECK(max_abs_diff(ab.matrix(), ba.matrix()) > 1e-3);
    CHECK(max_abs_diff(apply(compose_series(ad, flip), up).matrix(),
                       apply(flip, apply(ad, up)).matrix()) < 1e-15);

    const KrausChannel par = compose_parallel(n, n);
    CHECK(par.dim() == 4);
    CHECK(completeness_defect(par) < 1e-12);
    const DensityMatrix rho = density_from_bloch({0.1, 0.2, 0.3});
    const DensityMatrix sigma = density_from_bloch({-0.4, 0.0, 0.5});
    CHECK(max_abs_diff(apply(par, tensor(rho, sigma)).matrix(),
                       tensor(apply(n, rho), apply(n, sigma)).matrix()) < 1e-15);
    CHECK(throws_code(ErrorCode::UnsupportedDimension, [&] { compose_parallel(par, n); }));
}

TEST_CASE("convex mixtures")
{
    const KrausChannel a = eternal_channel(0.2);
    const KrausChannel b = eternal_channel(2.0);
    const std::vector<WeightedChannel> members{{0.25, a}, {0.75, b}};
    const KrausChannel m = mix(members);
    const DensityMatrix rho = density_from_bloch({0.3, 0.3, 0.3});
    const ComplexMatrix expected = 0.25 * apply(a, rho).matrix() + 0.75 * apply(b, rho).matrix();
    CHECK(max_abs_diff(apply(m, rho).matrix(), expected) < 1e-15);

    const std::vector<WeightedChannel> bad_sum{{0.5, a}, {0.6, b}};
    const std::vector<WeightedChannel> negative{{-0.5, a}, {1.5, b}};
    CHECK(throws_code(ErrorCode::BadWeights, [&] { mix(bad_sum); }));
    CHECK(throws_code(ErrorCode::BadWeights, [&] { mix(negative); }));
    CHECK(throws_code(ErrorCode::BadWeights, [] { mix(std::vector<WeightedChannel>{}); }));
}

TEST_CASE("superoperator application matches Kraus application")
{
    std::mt19937_64 rng(5);
    const KrausChannel par = compose_parallel(eternal_channel(0.5), eternal_channel(0.5));
    const ComplexMatrix s = superoperator(par);
    CHECK(s.rows() == 16);
    for (int i = 0; i < 10; ++i) {
        const DensityMatrix rho = tensor(density_from_bloch(random_bloch(rng)), density_from_bloch(random_bloch(rng)));
        CHECK(max_abs_diff(apply_superoperator(s, rho.matrix()), apply(par, rho).matrix()) < 1e-15);
    }
}

TEST_CASE("Pauli channel from contraction factors")
{
    const KrausChannel depolarizing = pauli_channel({0.5, 0.5, 0.5});
    CHECK(max_abs_diff(transfer_matrix(depolarizing), RealMatrix4::diagonal(1.0, 0.5, 0.5, 0.5)) < 1e-15);
    // factors (1, 1, -1) are the transpose: positive but not CP
    CHECK(throws_code(ErrorCode::InvalidArgument, [] { pauli_channel({1.0, 1.0, -1.0}); }));
}

TEST_CASE("post-selected branches renormalize")
{
    const KrausChannel half({std::sqrt(0.5) * ComplexMatrix::identity(2)}, 0.5);
    const ChannelOutput out = apply_traced(half, plus_state());
    CHECK(out.trace == doctest::Approx(0.5));
    CHECK(max_abs_diff(out.state.matrix(), plus_state().matrix()) < 1e-15);
    CHECK(throws_code(ErrorCode::InvalidArgument, [] { KrausChannel({ComplexMatrix::identity(2)}, 1.5); }));
}
