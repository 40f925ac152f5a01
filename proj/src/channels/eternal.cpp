#include "nmswitch/channels/eternal.hpp"

#include <algorithm>
#include <cmath>

#include "nmswitch/errors.hpp"

namespace nmswitch {

namespace {

void require_nonnegative(double t)
{
    if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "time must be >= 0");
}

// ln cosh t without overflow for large t.
double log_cosh(double t)
{
    const double a = std::abs(t);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

} // namespace

double eternal_xi1(double t)
{
    require_nonnegative(t);
    return t;
}

double eternal_xi2(double t)
{
    require_nonnegative(t);
    return t - log_cosh(t);
}

EternalAmplitudes eternal_amplitudes(double t)
{
    require_nonnegative(t);
    const double e2 = std::exp(-2.0 * t);
    return EternalAmplitudes{0.5 * (1.0 + e2), 0.5 * (1.0 - e2), std::exp(-eternal_xi2(t))};
}

EternalRates eternal_rates(double t)
{
    require_nonnegative(t);
    return EternalRates{1.0, 1.0, -std::tanh(t)};
}

KrausChannel eternal_channel(double t)
{
    const auto amp = eternal_amplitudes(t);
    const double c1 = std::sqrt(amp.a2);
    const double c3 = std::sqrt(0.5 * (amp.a1 + amp.a3));
    // A1 - A3 vanishes identically for these rates; clamp rounding.
    const double c4 = std::sqrt(std::max(0.0, 0.5 * (amp.a1 - amp.a3)));
    std::vector<ComplexMatrix> k;
    k.reserve(4);
    k.push_back(ComplexMatrix{{0.0, c1}, {0.0, 0.0}});
    k.push_back(ComplexMatrix{{0.0, 0.0}, {c1, 0.0}});
    k.push_back(ComplexMatrix{{c3, 0.0}, {0.0, c3}});
    k.push_back(ComplexMatrix{{-c4, 0.0}, {0.0, c4}});
    return KrausChannel(std::move(k));
}

BlochFactors eternal_bloch_factors(double t)
{
    const double coherence = std::exp(-eternal_xi2(t));
    return BlochFactors{coherence, coherence, std::exp(-2.0 * eternal_xi1(t))};
}

} // namespace nmswitch
