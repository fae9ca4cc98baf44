#pragma once

#include <random>

#include "pitchctl/tracking.hpp"

namespace pitchctl {

struct SyntheticOptions {
    int home_players = 11;
    int away_players = 11;
    double pitch_length = 105.0;
    double pitch_width = 68.0;
    double max_step = 0.5;  // meters/frame, per axis; 0 gives a stationary frame
};

/// Players uniformly placed on the pitch with uniform per-frame velocities.
/// Home players come first and are named h1..hN, away a1..aN.
Frame random_frame(std::mt19937_64& rng, const SyntheticOptions& opts = {});

}  // namespace pitchctl
