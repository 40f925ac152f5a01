#include "nmswitch/analysis/families.hpp"

#include <cmath>
#include <string>

#include "nmswitch/analysis/characteristic_time.hpp"
#include "nmswitch/channels/eternal.hpp"
#include "nmswitch/errors.hpp"
#include "nmswitch/switchop/quantum_switch.hpp"

namespace nmswitch::families {

ChannelFamily eternal()
{
    return ChannelFamily{"eternal", 2, [](double t) { return eternal_channel(t); }, std::nullopt};
}

ChannelFamily switched()
{
    return ChannelFamily{"switched", 2, [](double t) { return switched_family(t); }, switched_pole_time()};
}

ChannelFamily series()
{
    return ChannelFamily{"series", 2,
                         [](double t) {
                             const KrausChannel n = eternal_channel(t);
                             return compose_series(n, n);
                         },
                         std::nullopt};
}

ChannelFamily parallel()
{
    return ChannelFamily{"parallel", 4,
                         [](double t) {
                             const KrausChannel n = eternal_channel(t);
                             return compose_parallel(n, n);
                         },
                         std::nullopt};
}

ChannelFamily mixture(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::BadWeights, "mixture weight p must lie in [0, 1]");
    }
    return ChannelFamily{"mixture", 2,
                         [p](double t) {
                             const KrausChannel n = eternal_channel(t);
                             return mixed_order_channel(n, n, p);
                         },
                         std::nullopt};
}

ChannelFamily constant_rates(double g1, double g2, double g3)
{
    return ChannelFamily{"constant_rates", 2,
                         [=](double t) {
                             if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "time must be >= 0");
                             return pauli_channel(BlochFactors{std::exp(-2.0 * (g2 + g3) * t),
                                                               std::exp(-2.0 * (g1 + g3) * t),
                                                               std::exp(-2.0 * (g1 + g2) * t)});
                         },
                         std::nullopt};
}

} // namespace nmswitch::families
