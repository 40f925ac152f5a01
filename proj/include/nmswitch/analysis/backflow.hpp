// backflow.hpp: trace-distance information backflow on a time grid

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nmswitch/analysis/divisibility.hpp"
#include "nmswitch/analysis/families.hpp"
#include "nmswitch/core/qubit.hpp"

namespace nmswitch {

inline constexpr double kDerivativeTolerance = 1e-9;

struct BackflowReport {
    std::vector<double> times;
    std::vector<double> distance;
    std::vector<double> derivative;
    std::vector<Interval> revival_intervals; // where dD/dt > kDerivativeTolerance
    double measure{0.0};                     // trapezoid integral of the positive part of dD/dt
    std::optional<double> characteristic_time;

    bool reviving_at(std::size_t k) const { return derivative[k] > kDerivativeTolerance; }
};

struct StatePair {
    DensityMatrix a;
    DensityMatrix b;
};

/// {t0, t0 + dt, ..., t_max} with the last point snapped to t_max.
std::vector<double> uniform_grid(double t0, double t_max, double dt);

/// Derivative, revival intervals, measure and characteristic time of a
/// distance series. Grid must be strictly increasing with >= 3 points.
BackflowReport analyze_distance(std::vector<double> times, std::vector<double> distance);

BackflowReport backflow_scan(const ChannelFamily& family, const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                             std::span<const double> grid);

/// Many pairs at once; the family is sampled once per grid point.
std::vector<BackflowReport> backflow_scan_pairs(const ChannelFamily& family, std::span<const StatePair> pairs,
                                                std::span<const double> grid);

} // namespace nmswitch
