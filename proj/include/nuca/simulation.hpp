#pragma once

// Exact global map on eventually periodic configurations, iteration,
// charge accounting, Cantor distance and perturbation-cone probes.

#include <optional>
#include <vector>

#include "nuca/core.hpp"

namespace nuca {

struct CantorDistance {
    bool zero = true;
    long long k = 0;  // distance is 2^-k when not zero

    double value() const;
};

struct ChargeRow {
    long long n;
    long long charge_x;
    long long charge_hx;
    std::optional<double> ratio;
};

struct ChargeSeries {
    std::vector<ChargeRow> rows;
    // empirical liminf/limsup estimates over the last half of the series
    std::optional<double> tail_min;
    std::optional<double> tail_max;
};

struct SpaceTimeDiagram {
    long long window_lo = 0;
    long long window_hi = 0;
    std::vector<Word> rows;  // rows[t] = configuration restricted to window
};

struct PerturbationCone {
    long long position = 0;
    long long window_lo = 0;
    long long window_hi = 0;
    std::vector<std::vector<char>> masks;  // masks[t][i-window_lo] = differ?
};

/// One application of the global map H_theta; exact on eventually
/// periodic inputs.
Configuration step(const Distribution& theta, const Configuration& x);

Configuration iterate(const Distribution& theta, const Configuration& x, long long t);

CantorDistance cantor_distance(const Configuration& x, const Configuration& y);

/// Sum of letters over [-n, n].
long long partial_charge(const Configuration& x, long long n);

/// Finite sum for finite-support configurations, nullopt = infinite.
std::optional<long long> global_charge(const Configuration& x);

ChargeSeries charge_ratio_series(const Distribution& theta, const Configuration& x,
                                 long long n_max);

SpaceTimeDiagram space_time(const Distribution& theta, const Configuration& x,
                            long long a, long long b, long long steps);

/// Flip the letter at `position` (cycled +1 mod s) and track where the
/// two orbits differ over `steps` applications.
PerturbationCone perturbation_cone(const Distribution& theta, const Configuration& x,
                                   long long position, long long steps);

}  // namespace nuca
