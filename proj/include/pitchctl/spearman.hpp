#pragma once

#include "pitchctl/grid.hpp"
#include "pitchctl/tracking.hpp"

namespace pitchctl {

/// Potential-field baseline: each player's pull on a location is
/// t^(-beta), where t is a straight-line, constant-speed arrival time.
struct SpearmanParams {
    double beta = 2.5;
    double v_max = 5.0;    // m/s
    double t_floor = 0.1;  // s
    GridSpec spec{};

    void validate() const;
};

/// max(distance / v_max, t_floor) in seconds.
double arrival_time(const PlayerState& player, double x, double y, const SpearmanParams& params);

/// Weighted mean of team labels (+1 Home, -1 Away) with weights t_i^(-beta).
ControlGrid spearman_grid(const Frame& frame, const SpearmanParams& params);

}  // namespace pitchctl
