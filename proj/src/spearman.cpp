#include "pitchctl/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pitchctl/error.hpp"

namespace pitchctl {

void SpearmanParams::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(beta)) throw ParameterError("beta must be positive and finite");
    if (!positive(v_max)) throw ParameterError("v_max must be positive and finite");
    if (!positive(t_floor)) throw ParameterError("t_floor must be positive and finite");
    spec.validate();
}

double arrival_time(const PlayerState& player, double x, double y, const SpearmanParams& params) {
    return std::max(std::hypot(x - player.x, y - player.y) / params.v_max, params.t_floor);
}

ControlGrid spearman_grid(const Frame& frame, const SpearmanParams& params) {
    params.validate();
    if (frame.players.empty()) throw EmptyFrameError();

    const auto& spec = params.spec;
    ControlGrid grid(spec);
    const std::size_t n = frame.players.size();
    std::vector<double> times(n);
    for (int j = 0; j < spec.height_cells; ++j) {
        const double cy = cell_center_y(spec, j);
        for (int i = 0; i < spec.width_cells; ++i) {
            const double cx = cell_center_x(spec, i);
            double t_min = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                times[k] = arrival_time(frame.players[k], cx, cy, params);
                t_min = k == 0 ? times[k] : std::min(t_min, times[k]);
            }
            // Weights are taken relative to the fastest arrival, (t_min/t)^beta,
            // which leaves the ratio unchanged and cannot overflow or underflow
            // to an all-zero denominator.
            double num = 0.0;
            double den = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double w = std::pow(t_min / times[k], params.beta);
                num += team_sign(frame.players[k].team) * w;
                den += w;
            }
            grid.at(i, j) = std::clamp(num / den, -1.0, 1.0);
        }
    }
    return grid;
}

}  // namespace pitchctl
