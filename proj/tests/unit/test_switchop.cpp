#include <cmath>
#include <random>

#include "doctest.h"
#include "nmswitch/channels/eternal.hpp"
#include "nmswitch/channels/transfer.hpp"
#include "nmswitch/errors.hpp"
#include "nmswitch/switchop/quantum_switch.hpp"

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

ComplexMatrix amplitude_damping(double g, int which)
{
    if (which == 0) return ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - g)}};
    return ComplexMatrix{{0.0, std::sqrt(g)}, {0.0, 0.0}};
}

} // namespace

TEST_CASE("closed form coefficients, frozen values")
{
    const SwitchClosedForm at1 = switched_channel_closed_form(1.0);
    CHECK(at1.A == doctest::Approx(0.45855691238860485).epsilon(1e-15));
    CHECK(at1.B == doctest::Approx(0.5414430876113951).epsilon(1e-15));
    CHECK(at1.n == doctest::Approx(0.9065443659480614).epsilon(1e-15));

    const SwitchClosedForm at0 = switched_channel_closed_form(0.0);
    CHECK(at0.A == 1.0);
    CHECK(at0.B == 0.0);
    CHECK(at0.n == 1.0);

    const SwitchClosedForm late = switched_channel_closed_form(5.0);
    CHECK(late.A - late.B == doctest::Approx(-0.14284231656350592).epsilon(1e-13));
    // no overflow far out; A -> 3/7, B -> 4/7
    const SwitchClosedForm far = switched_channel_closed_form(400.0);
    CHECK(far.A == doctest::Approx(3.0 / 7.0));
    CHECK(far.B == doctest::Approx(4.0 / 7.0));

    CHECK(throws_code(ErrorCode::NegativeTime, [] { switched_channel_closed_form(-0.1); }));
}

TEST_CASE("closed form derivatives match finite differences")
{
    for (double t : {0.05, 0.3, 1.0, 2.5}) {
        const double h = 1e-6;
        const auto p = switched_channel_closed_form(t + h);
        const auto m = switched_channel_closed_form(t - h);
        const SwitchCoefficientRates d = switched_coefficient_derivatives(t);
        CHECK(d.dA == doctest::Approx((p.A - m.A) / (2 * h)).epsilon(1e-8));
        CHECK(d.dB == doctest::Approx((p.B - m.B) / (2 * h)).epsilon(1e-8));
        CHECK(d.dA + d.dB == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("brute-force '+' branch equals the closed form")
{
    std::mt19937_64 rng(17);
    for (double t : {0.0, 0.2, 0.671227023226763, 1.0, 4.0}) {
        const KrausChannel n = eternal_channel(t);
        const SwitchClosedForm cf = switched_channel_closed_form(t);
        for (int i = 0; i < 5; ++i) {
            const DensityMatrix rho = density_from_bloch(random_bloch(rng));
            const ControlMeasurement m = switch_measure(n, n, rho, ControlSpec::plus());
            REQUIRE(m.plus.state);
            CHECK(m.plus.probability == doctest::Approx(cf.n).epsilon(1e-13));
            CHECK(m.plus.probability + m.minus.probability == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(max_abs_diff(m.plus.state->matrix(), apply_closed_form(cf, rho).matrix()) < 1e-13);
        }
        const KrausChannel branch = switched_family(t);
        CHECK(branch.trace_scale() == doctest::Approx(cf.n).epsilon(1e-13));
        const BlochFactors f = switched_bloch_factors(cf);
        CHECK(max_abs_diff(transfer_matrix(branch), RealMatrix4::diagonal(1.0, f.x, f.y, f.z)) < 1e-13);
    }
}

TEST_CASE("SWITCH Kraus operators")
{
    const KrausChannel n = eternal_channel(0.4);
    const KrausChannel w = switch_kraus(n, n);
    CHECK(w.dim() == 4);
    CHECK(w.size() == 16);
    CHECK(completeness_defect(w) < 1e-12);
    CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { switch_kraus(compose_parallel(n, n), n); }));
}

TEST_CASE("definite control reduces to a fixed order")
{
    const KrausChannel ad({amplitude_damping(0.3, 0), amplitude_damping(0.3, 1)});
    const KrausChannel n = eternal_channel(0.5);
    const DensityMatrix rho = density_from_bloch({0.4, -0.1, 0.2});

    const ControlMeasurement zero = switch_measure(ad, n, rho, ControlSpec::zero());
    CHECK(zero.plus.probability == doctest::Approx(0.5));
    CHECK(max_abs_diff(zero.plus.state->matrix(), apply(compose_series(ad, n), rho).matrix()) < 1e-14);

    const ControlMeasurement one = switch_measure(ad, n, rho, ControlSpec::one());
    CHECK(max_abs_diff(one.minus.state->matrix(), apply(compose_series(n, ad), rho).matrix()) < 1e-14);
}

TEST_CASE("state-dependent branch probability is rejected")
{
    const KrausChannel ad({amplitude_damping(0.6, 0), amplitude_damping(0.6, 1)});
    CHECK(throws_code(ErrorCode::NonUniformBranch,
                      [&] { switch_branch_channel(ad, ad, ControlSpec::plus(), Branch::Plus); }));
    // the measurement itself still works state by state
    const ControlMeasurement m = switch_measure(ad, ad, density_from_bloch({0, 0, -1}), ControlSpec::plus());
    CHECK(m.plus.probability + m.minus.probability == doctest::Approx(1.0));
    CHECK_FALSE(m.plus.effective);
}

TEST_CASE("a branch that never fires")
{
    // identity channels: the '-' outcome of a |+> control has probability 0
    const KrausChannel id = KrausChannel::identity(2);
    CHECK(throws_code(ErrorCode::ZeroProbabilityBranch,
                      [&] { switch_branch_channel(id, id, ControlSpec::plus(), Branch::Minus); }));
    const ControlMeasurement m = switch_measure(id, id, density_from_bloch({0, 0, 1}), ControlSpec::plus());
    CHECK(m.minus.probability < kZeroBranchProbability);
    CHECK_FALSE(m.minus.state);
}

TEST_CASE("mixed causal order collapses to the series map")
{
    std::mt19937_64 rng(23);
    const KrausChannel n = eternal_channel(0.8);
    const KrausChannel twice = compose_series(n, n);
    for (double p : {0.0, 0.3, 0.5, 1.0}) {
        const DensityMatrix rho = density_from_bloch(random_bloch(rng));
        CHECK(max_abs_diff(mixed_order_traced(n, n, p, rho).matrix(), apply(twice, rho).matrix()) < 1e-14);
        CHECK(max_abs_diff(transfer_matrix(mixed_order_channel(n, n, p)), transfer_matrix(twice)) < 1e-14);
    }
    // for different channels it is the weighted sum of both orders
    const KrausChannel ad({amplitude_damping(0.5, 0), amplitude_damping(0.5, 1)});
    const DensityMatrix rho = density_from_bloch({0.6, 0.0, 0.0});
    const ComplexMatrix expected = 0.3 * apply(compose_series(ad, n), rho).matrix() +
                                   0.7 * apply(compose_series(n, ad), rho).matrix();
    CHECK(max_abs_diff(mixed_order_traced(ad, n, 0.3, rho).matrix(), expected) < 1e-14);
    CHECK(throws_code(ErrorCode::BadWeights, [&] { mixed_order_kraus(n, n, 1.2); }));
    // p = 1/2 is the SWITCH list
    const auto half = mixed_order_kraus(n, n, 0.5);
    const KrausChannel w = switch_kraus(n, n);
    REQUIRE(half.size() == w.size());
    for (std::size_t i = 0; i < half.size(); ++i) CHECK(max_abs_diff(half[i], w.kraus()[i]) < 1e-15);
}

TEST_CASE("partial trace over the control")
{
    const DensityMatrix rho = density_from_bloch({0.1, 0.2, 0.3});
    const DensityMatrix c = density_from_bloch({0.0, 0.6, 0.0});
    CHECK(max_abs_diff(trace_out_control(tensor(rho, c).matrix()), rho.matrix()) < 1e-15);
}
