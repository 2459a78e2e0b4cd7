#pragma once

#include <cstdint>
#include <random>

#include "tracklab/spattern.hpp"

namespace tracklab {

using Rng = std::mt19937_64;

// Weights on T that are a sum of random 3-tracks, 4-tracks and octagons, so
// always realizable; total at most max_weight.
EdgeWeights random_weights(Rng& rng, std::int64_t max_weight);

// Random Spattern on T: for each triangle the points of its edges are
// shuffled and matched with the corner counts fixed by the weights.
SingularState random_spattern(Rng& rng, std::int64_t max_weight);

// Random finger move: a line of one triangle is pushed across one of its
// edges, adding two points there and a returning arc in the other triangle.
SingularState add_random_finger(Rng& rng, const SingularState& s, const std::string& tag);

// Random spattern plus random fingers and edge permutations; may contain
// returning arcs. Total weight at most max_weight.
SingularState random_singular_state(Rng& rng, std::int64_t max_weight);

EdgePermutation random_permutation(Rng& rng, const SingularState& s, int edge);

}  // namespace tracklab
