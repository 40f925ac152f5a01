#include "nmswitch/analysis/series_doubling.hpp"

#include <algorithm>
#include <cmath>

#include "nmswitch/analysis/divisibility.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch {

SeriesCheckReport series_doubling_check(double t, const GeneratorOptions& options)
{
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "series check requires t > 0");
    const ChannelFamily family = families::series();

    LindbladRates extracted;
    if (t >= options.h) {
        const GeneratorSample s = extract_generator(family, t, options);
        if (s.pole) throw Error(ErrorCode::InvalidArgument, "series transfer matrix is singular");
        extracted = s.rates;
    } else {
        // second-order forward stencil, since F(t - h) is undefined
        const double h = options.h;
        const RealMatrix4 f0 = sample_transfer(family, t).F;
        const RealMatrix4 dF = (1.0 / (2.0 * h)) * (4.0 * sample_transfer(family, t + h).F -
                                                    sample_transfer(family, t + 2.0 * h).F - 3.0 * f0);
        const auto inverse = f0.inverse();
        if (!inverse) throw Error(ErrorCode::InvalidArgument, "series transfer matrix is singular");
        extracted = rates_from_generator(dF * *inverse);
    }

    SeriesCheckReport report;
    report.t = t;
    report.extracted = extracted;
    report.expected = LindbladRates{1.0, 1.0, -std::tanh(t)};
    report.max_error = std::max({std::abs(extracted.g1 - 1.0), std::abs(extracted.g2 - 1.0),
                                 std::abs(extracted.g3 + std::tanh(t))});
    report.pairwise_nonnegative = is_p_divisible_at(extracted);
    report.passed = report.max_error < 1e-6 && report.pairwise_nonnegative;
    return report;
}

} // namespace nmswitch
