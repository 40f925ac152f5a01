#include "nmswitch/analysis/characteristic_time.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <optional>

#include "nmswitch/errors.hpp"
#include "nmswitch/switchop/quantum_switch.hpp"

namespace nmswitch {

namespace {

constexpr double kScanEnd = 20.0;
constexpr int kScanSteps = 20000;

// First root of g on (0, kScanEnd], bisected to machine precision.
template <typename F>
std::optional<double> first_root(F&& g)
{
    const double step = kScanEnd / kScanSteps;
    double lo = 0.0;
    double g_lo = g(lo);
    for (int k = 1; k <= kScanSteps; ++k) {
        const double hi = k * step;
        const double g_hi = g(hi);
        if (g_hi == 0.0) return hi;
        if (g_lo != 0.0 && (g_lo < 0.0) != (g_hi < 0.0)) {
            double a = lo, b = hi, ga = g_lo;
            for (int it = 0; it < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * b; ++it) {
                const double mid = 0.5 * (a + b);
                const double gm = g(mid);
                if (gm == 0.0) return mid;
                if ((gm < 0.0) == (ga < 0.0)) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        lo = hi;
        g_lo = g_hi;
    }
    return std::nullopt;
}

} // namespace

CharacteristicTimeQuery CharacteristicTimeQuery::from_pair(const BlochVector& a, const BlochVector& b)
{
    const double a1 = a.x - b.x;
    const double a2 = a.y - b.y;
    const double a3 = a.z - b.z;
    if (a3 == 0.0) {
        throw Error(ErrorCode::DegenerateInitialPair, "a3(0) = 0: the characteristic time is undefined");
    }
    return CharacteristicTimeQuery{std::sqrt(a1 * a1 + a2 * a2) / std::abs(a3)};
}

double switched_pole_time()
{
    return 0.5 * std::log(1.0 + 2.0 * std::sqrt(2.0));
}

double characteristic_residual(double t)
{
    const SwitchClosedForm cf = switched_channel_closed_form(t);
    return std::exp(t) * (cf.A - cf.B) / cf.A;
}

double characteristic_time(const CharacteristicTimeQuery& query)
{
    const double chi0 = query.chi0;
    if (!(chi0 >= 0.0) || !std::isfinite(chi0)) {
        throw Error(ErrorCode::InvalidArgument, "chi0 must be finite and >= 0");
    }
    const auto plus = first_root([chi0](double t) { return characteristic_residual(t) - chi0; });
    const auto minus = first_root([chi0](double t) { return characteristic_residual(t) + chi0; });
    if (plus && minus) return std::min(*plus, *minus);
    if (plus) return *plus;
    if (minus) return *minus;
    throw Error(ErrorCode::NoSolution, "no characteristic time on (0, 20]");
}

} // namespace nmswitch
