#include "nmswitch/analysis/generator.hpp"

#include <cmath>
#include <limits>

#include "nmswitch/analysis/characteristic_time.hpp"
#include "nmswitch/errors.hpp"
#include "nmswitch/switchop/quantum_switch.hpp"

namespace nmswitch {

LindbladRates rates_from_generator(const RealMatrix4& L)
{
    const double lxx = L(1, 1);
    const double lyy = L(2, 2);
    const double lzz = L(3, 3);
    return LindbladRates{0.25 * (lxx - lyy - lzz), 0.25 * (lyy - lxx - lzz), 0.25 * (lzz - lxx - lyy)};
}

RealMatrix4 generator_from_rates(const LindbladRates& r)
{
    return RealMatrix4::diagonal(0.0, -2.0 * (r.g2 + r.g3), -2.0 * (r.g1 + r.g3), -2.0 * (r.g1 + r.g2));
}

TransferMatrix sample_transfer(const ChannelFamily& family, double t)
{
    if (family.dim != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "family '" + family.name + "' is not a qubit family");
    }
    return TransferMatrix{t, transfer_matrix(family.at(t))};
}

RealMatrix4 central_difference(const ChannelFamily& family, double t, double h)
{
    const RealMatrix4 forward = sample_transfer(family, t + h).F;
    const RealMatrix4 backward = sample_transfer(family, t - h).F;
    return (1.0 / (2.0 * h)) * (forward - backward);
}

GeneratorSample extract_generator(const ChannelFamily& family, double t, const GeneratorOptions& options)
{
    if (!(options.h > 0.0) || !(t >= options.h)) {
        throw Error(ErrorCode::InvalidArgument, "extract_generator requires t >= h > 0");
    }
    const RealMatrix4 F = sample_transfer(family, t).F;
    const RealMatrix4 dF = central_difference(family, t, options.h);

    GeneratorSample sample;
    sample.t = t;
    const bool near_singular_time =
        family.singular_time && std::abs(t - *family.singular_time) < options.pole_radius;
    const bool ill_conditioned =
        std::abs(F.determinant()) < options.det_floor || F.condition_number() > options.cond_ceiling;
    const auto inverse = F.inverse();

    if (near_singular_time || ill_conditioned || !inverse) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        sample.pole = true;
        sample.rates = LindbladRates{nan, nan, nan};
        if (inverse) sample.L = dF * *inverse;
        return sample;
    }
    sample.L = dF * *inverse;
    sample.rates = rates_from_generator(sample.L);
    return sample;
}

std::vector<GeneratorSample> extract_generator_grid(const ChannelFamily& family, std::span<const double> grid,
                                                    const GeneratorOptions& options)
{
    std::vector<GeneratorSample> out;
    out.reserve(grid.size());
    for (double t : grid) out.push_back(extract_generator(family, t, options));
    return out;
}

GeneratorSample closed_form_switched_rates(double t)
{
    if (std::abs(t - switched_pole_time()) < 1e-9) {
        throw Error(ErrorCode::PoleAtCharacteristicTime, "switched rates diverge at the characteristic time");
    }
    const SwitchClosedForm cf = switched_channel_closed_form(t);
    const SwitchCoefficientRates d = switched_coefficient_derivatives(t);
    // d/dt ln A and d/dt ln|A - B|
    const double lxx = d.dA / cf.A;
    const double lzz = (d.dA - d.dB) / (cf.A - cf.B);

    GeneratorSample sample;
    sample.t = t;
    sample.L = RealMatrix4::diagonal(0.0, lxx, lxx, lzz);
    sample.rates = LindbladRates{-0.25 * lzz, -0.25 * lzz, 0.25 * lzz - 0.5 * lxx};
    return sample;
}

} // namespace nmswitch
