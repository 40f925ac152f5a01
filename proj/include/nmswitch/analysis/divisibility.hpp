// divisibility.hpp: CP- and P-divisibility verdicts from canonical rates

#pragma once

#include <span>
#include <string>
#include <vector>

#include "nmswitch/analysis/generator.hpp"

namespace nmswitch {

struct Interval {
    double start;
    double end;
};

/// Which pairwise sums G_i + G_j are negative at time t.
struct PairViolation {
    double t;
    bool g1_g2;
    bool g1_g3;
    bool g2_g3;
};

struct DivisibilityVerdict {
    std::vector<Interval> cp_divisible_intervals;
    std::vector<Interval> p_divisible_intervals;
    std::vector<PairViolation> violated_pairs;
    std::vector<Interval> pole_intervals; // samples with no usable generator
};

inline constexpr double kRateSignTolerance = 1e-9;

bool is_cp_divisible_at(const LindbladRates& r, double tol = kRateSignTolerance);
bool is_p_divisible_at(const LindbladRates& r, double tol = kRateSignTolerance);

/// Pole samples are skipped and break intervals.
DivisibilityVerdict cp_divisibility(std::span<const GeneratorSample> samples);
DivisibilityVerdict p_divisibility(std::span<const GeneratorSample> samples);
DivisibilityVerdict assess_divisibility(std::span<const GeneratorSample> samples);

/// "[a, b], [c, d]" or "none".
std::string format_intervals(std::span<const Interval> intervals);

} // namespace nmswitch
