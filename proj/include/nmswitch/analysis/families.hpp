// families.hpp: one-parameter channel families t -> Lambda(t, 0)

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nmswitch/channels/kraus_channel.hpp"

namespace nmswitch {

struct ChannelFamily {
    std::string name;
    std::size_t dim{2};
    std::function<KrausChannel(double)> at;
    // Time at which the transfer matrix is known to be singular, if any.
    std::optional<double> singular_time;
};

namespace families {

ChannelFamily eternal();
/// '+' branch of the SWITCH on two eternal channels; singular at the
/// characteristic time.
ChannelFamily switched();
/// t -> Lambda(t) . Lambda(t)
ChannelFamily series();
/// t -> Lambda(t) (x) Lambda(t)
ChannelFamily parallel();
/// Mixed causal order p n2.n1 + (1 - p) n1.n2 with n1 = n2 = Lambda(t),
/// built by tracing out the control of the order-weighted SWITCH.
ChannelFamily mixture(double p);
/// Pauli dynamics with constant canonical rates (g1, g2, g3).
ChannelFamily constant_rates(double g1, double g2, double g3);

} // namespace families

} // namespace nmswitch
