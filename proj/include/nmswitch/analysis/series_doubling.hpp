// series_doubling.hpp: series doubling of the eternal generator

#pragma once

#include "nmswitch/analysis/generator.hpp"

namespace nmswitch {

struct SeriesCheckReport {
    double t;
    LindbladRates extracted;
    LindbladRates expected; // (1, 1, -tanh t)
    double max_error;
    bool pairwise_nonnegative;
    bool passed; // max_error < 1e-6 and pairwise_nonnegative
};

/// Extracts the generator of t -> Lambda(t) . Lambda(t) and compares it with
/// twice the eternal rates. Requires t > 0; uses a one-sided stencil when
/// t < h.
SeriesCheckReport series_doubling_check(double t, const GeneratorOptions& options = {});

} // namespace nmswitch
