#pragma once

// Injectivity analysis via the product graph: a distribution induces a
// non-injective map iff the projected product graph admits a bi-infinite
// path labeled by the distribution through an off-diagonal node.

#include <optional>

#include "nuca/core.hpp"
#include "nuca/debruijn.hpp"
#include "nuca/simulation.hpp"

namespace nuca {

struct InjectivityReport {
    bool injective = true;
    std::optional<Configuration> witness_x;
    std::optional<Configuration> witness_y;
};

InjectivityReport is_distribution_injective(const Distribution& theta);

/// True iff x != y and step(theta, x) == step(theta, y).
bool verify_witness(const Distribution& theta, const Configuration& x, const Configuration& y);

}  // namespace nuca
