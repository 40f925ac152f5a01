#include "nmswitch/analysis/divisibility.hpp"

#include <algorithm>
#include <sstream>

namespace nmswitch {

namespace {

template <typename Predicate>
std::vector<Interval> runs(std::span<const GeneratorSample> samples, Predicate&& holds)
{
    std::vector<Interval> out;
    bool open = false;
    for (const auto& s : samples) {
        const bool ok = holds(s);
        if (ok && !open) {
            out.push_back(Interval{s.t, s.t});
            open = true;
        } else if (ok) {
            out.back().end = s.t;
        } else {
            open = false;
        }
    }
    return out;
}

} // namespace

bool is_cp_divisible_at(const LindbladRates& r, double tol)
{
    return std::min({r.g1, r.g2, r.g3}) >= -tol;
}

bool is_p_divisible_at(const LindbladRates& r, double tol)
{
    return r.g1 + r.g2 >= -tol && r.g1 + r.g3 >= -tol && r.g2 + r.g3 >= -tol;
}

DivisibilityVerdict cp_divisibility(std::span<const GeneratorSample> samples)
{
    DivisibilityVerdict v;
    v.cp_divisible_intervals =
        runs(samples, [](const GeneratorSample& s) { return !s.pole && is_cp_divisible_at(s.rates); });
    return v;
}

DivisibilityVerdict p_divisibility(std::span<const GeneratorSample> samples)
{
    DivisibilityVerdict v;
    v.p_divisible_intervals =
        runs(samples, [](const GeneratorSample& s) { return !s.pole && is_p_divisible_at(s.rates); });
    for (const auto& s : samples) {
        if (s.pole || is_p_divisible_at(s.rates)) continue;
        const auto& r = s.rates;
        v.violated_pairs.push_back(PairViolation{s.t, r.g1 + r.g2 < -kRateSignTolerance,
                                                 r.g1 + r.g3 < -kRateSignTolerance,
                                                 r.g2 + r.g3 < -kRateSignTolerance});
    }
    return v;
}

DivisibilityVerdict assess_divisibility(std::span<const GeneratorSample> samples)
{
    DivisibilityVerdict v = p_divisibility(samples);
    v.cp_divisible_intervals = cp_divisibility(samples).cp_divisible_intervals;
    v.pole_intervals = runs(samples, [](const GeneratorSample& s) { return s.pole; });
    return v;
}

std::string format_intervals(std::span<const Interval> intervals)
{
    if (intervals.empty()) return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i) os << ", ";
        os << '[' << intervals[i].start << ", " << intervals[i].end << ']';
    }
    return os.str();
}

} // namespace nmswitch
