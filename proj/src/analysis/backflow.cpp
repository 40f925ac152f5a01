#include "nmswitch/analysis/backflow.hpp"

#include <algorithm>
#include <cmath>

#include "nmswitch/channels/kraus_channel.hpp"
#include "nmswitch/core/eigen.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch {

namespace {

// Zero of the linear interpolant of d between (t0, d0) and (t1, d1), clamped.
double crossing(double t0, double d0, double t1, double d1)
{
    if (d1 == d0) return t0;
    return std::clamp(t0 - d0 * (t1 - t0) / (d1 - d0), t0, t1);
}

} // namespace

std::vector<double> uniform_grid(double t0, double t_max, double dt)
{
    if (!(dt > 0.0) || !(t_max >= t0) || !std::isfinite(t_max)) {
        throw Error(ErrorCode::InvalidArgument, "grid needs dt > 0 and t_max >= t0");
    }
    const auto steps = static_cast<std::size_t>(std::llround(std::floor((t_max - t0) / dt + 1e-9)));
    std::vector<double> grid;
    grid.reserve(steps + 2);
    for (std::size_t k = 0; k <= steps; ++k) grid.push_back(t0 + static_cast<double>(k) * dt);
    if (t_max - grid.back() > 1e-9 * dt) {
        grid.push_back(t_max);
    } else {
        grid.back() = t_max;
    }
    return grid;
}

BackflowReport analyze_distance(std::vector<double> times, std::vector<double> distance)
{
    const std::size_t n = times.size();
    if (n < 3 || distance.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "distance series needs >= 3 points matching the grid");
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (!(times[k] > times[k - 1])) throw Error(ErrorCode::InvalidArgument, "grid must be strictly increasing");
    }

    BackflowReport report;
    report.derivative.resize(n);
    auto& d = report.derivative;
    d[0] = (distance[1] - distance[0]) / (times[1] - times[0]);
    d[n - 1] = (distance[n - 1] - distance[n - 2]) / (times[n - 1] - times[n - 2]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        d[k] = (distance[k + 1] - distance[k - 1]) / (times[k + 1] - times[k - 1]);
    }

    for (std::size_t k = 0; k < n;) {
        if (d[k] <= kDerivativeTolerance) {
            ++k;
            continue;
        }
        std::size_t last = k;
        while (last + 1 < n && d[last + 1] > kDerivativeTolerance) ++last;
        const double start = k == 0 ? times[0] : crossing(times[k - 1], d[k - 1], times[k], d[k]);
        const double end = last + 1 == n ? times[last] : crossing(times[last], d[last], times[last + 1], d[last + 1]);
        report.revival_intervals.push_back(Interval{start, end});
        k = last + 1;
    }

    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double lo = d[k] > kDerivativeTolerance ? d[k] : 0.0;
        const double hi = d[k + 1] > kDerivativeTolerance ? d[k + 1] : 0.0;
        report.measure += 0.5 * (lo + hi) * (times[k + 1] - times[k]);
    }
    if (!report.revival_intervals.empty()) report.characteristic_time = report.revival_intervals.front().start;

    report.times = std::move(times);
    report.distance = std::move(distance);
    return report;
}

BackflowReport backflow_scan(const ChannelFamily& family, const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                             std::span<const double> grid)
{
    const StatePair pair{rho_a, rho_b};
    return std::move(backflow_scan_pairs(family, std::span<const StatePair>(&pair, 1), grid).front());
}

std::vector<BackflowReport> backflow_scan_pairs(const ChannelFamily& family, std::span<const StatePair> pairs,
                                                std::span<const double> grid)
{
    for (const auto& p : pairs) {
        if (p.a.dim() != family.dim || p.b.dim() != family.dim) {
            throw Error(ErrorCode::DimensionMismatch, "state dimension does not match family '" + family.name + "'");
        }
    }
    std::vector<std::vector<double>> distances(pairs.size(), std::vector<double>(grid.size()));
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const ComplexMatrix super = superoperator(family.at(grid[k]));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            // the channel is linear, so evolve the difference directly
            const ComplexMatrix diff = apply_superoperator(super, pairs[i].a.matrix() - pairs[i].b.matrix());
            distances[i][k] = 0.5 * trace_norm_hermitian(diff);
        }
    }
    std::vector<BackflowReport> out;
    out.reserve(pairs.size());
    const std::vector<double> times(grid.begin(), grid.end());
    for (auto& dist : distances) out.push_back(analyze_distance(times, std::move(dist)));
    return out;
}

} // namespace nmswitch
