#pragma once

// Linear rule sets over Z_s: wall detection with basis-vector reduction,
// exact coefficient propagation radii, and the sensitive-vs-equicontinuous
// classification of eventually periodic distributions.

#include <optional>
#include <vector>

#include "nuca/core.hpp"

namespace nuca {

enum class WallSide { Left, Right };

struct OrbitSummary {
    int basis_index = 0;
    long long cycle_entry = 0;
    long long cycle_length = 0;
};

struct WallCertificate {
    RuleWord pattern;
    WallSide side = WallSide::Right;
    std::vector<OrbitSummary> orbits;
    bool verified = false;
    // filled by classify: where the pattern sits in the distribution
    int phase = 0;
    int length = 0;
};

enum class DynamicsVerdict { Equicontinuous, SensitiveBoundedEvidence };

struct EmpiricalSummary {
    bool any_escape = false;
    long long max_distance = 0;
    long long trials = 0;
    long long steps = 0;
    long long window = 0;
};

struct DynamicsReport {
    DynamicsVerdict verdict = DynamicsVerdict::SensitiveBoundedEvidence;
    std::vector<WallCertificate> certificates;
    int n_max = 0;  // search bound (evidence is bounded by construction)
    std::optional<EmpiricalSummary> empirical;
};

/// Orbit check: does every perturbation entering from the right stay out
/// of the leftmost r cells, for every starting vector? By linearity the
/// unit vectors suffice; `exhaustive` enumerates all of A^r instead.
std::pair<bool, WallCertificate> is_right_wall(const RuleSet& rs, const RuleWord& psi,
                                               bool exhaustive = false);
std::pair<bool, WallCertificate> is_left_wall(const RuleSet& rs, const RuleWord& psi,
                                              bool exhaustive = false);

/// Exact coefficient spread of H^n at cell i, for n = 0..steps.
std::vector<long long> propagation_radii(const Distribution& theta, long long cell,
                                         int steps);

DynamicsReport classify(const Distribution& theta, int n_max);

EmpiricalSummary empirical_classify(const Distribution& theta, long long trials,
                                    long long steps, long long window);

/// Default search bound: several period wraps, small orbit spaces.
int default_wall_search_bound(const Distribution& theta);

}  // namespace nuca
