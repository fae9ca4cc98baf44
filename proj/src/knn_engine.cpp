#include "pitchctl/knn_engine.hpp"

#include <algorithm>
#include <cmath>

#include "pitchctl/error.hpp"

namespace pitchctl {

void ModelParams::validate() const {
    if (lags.empty()) throw ParameterError("at least one lag is required");
    for (int eta : lags) {
        if (eta < 0) throw ParameterError("lags must be >= 0, got " + std::to_string(eta));
    }
    if (xi && !(std::isfinite(*xi) && *xi > 0.0)) throw ParameterError("xi must be positive and finite");
    if (tau && *tau < 1) throw ParameterError("tau must be >= 1");
    if (!(std::isfinite(decay_scale) && decay_scale > 0.0)) {
        throw ParameterError("decay scale must be positive and finite");
    }
    spec.validate();
}

std::vector<LaggedPosition> lagged_positions(const Frame& frame, int eta) {
    std::vector<LaggedPosition> out;
    out.reserve(frame.players.size());
    for (std::size_t k = 0; k < frame.players.size(); ++k) {
        const auto& p = frame.players[k];
        out.push_back({k, p.x + eta * p.dx, p.y + eta * p.dy, p.team});
    }
    return out;
}

NearestResult nearest_player(double x, double y, std::span<const LaggedPosition> positions) {
    if (positions.empty()) throw EmptyFrameError();
    std::size_t best = 0;
    double best_d2 = 0.0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const double ddx = x - positions[k].x;
        const double ddy = y - positions[k].y;
        const double d2 = ddx * ddx + ddy * ddy;
        // Strict comparison keeps the earlier index on ties; positions are
        // normally in player_index order.
        if (k == 0 || d2 < best_d2 ||
            (d2 == best_d2 && positions[k].player_index < positions[best].player_index)) {
            best = k;
            best_d2 = d2;
        }
    }
    return {positions[best].player_index, std::sqrt(best_d2)};
}

VoronoiLayer voronoi_layer(const Frame& frame, int eta, const GridSpec& spec) {
    spec.validate();
    if (frame.players.empty()) throw EmptyFrameError();

    const auto sites = lagged_positions(frame, eta);
    const std::size_t n = sites.size();
    std::vector<double> sx(n), sy(n), sign(n), row_dy2(n);
    for (std::size_t k = 0; k < n; ++k) {
        sx[k] = sites[k].x;
        sy[k] = sites[k].y;
        sign[k] = team_sign(sites[k].team);
    }

    VoronoiLayer layer{ControlGrid(spec), std::vector<double>(spec.cell_count())};
    auto values = layer.owner.values();
    const auto width = static_cast<std::size_t>(spec.width_cells);

    for (int j = 0; j < spec.height_cells; ++j) {
        const double cy = cell_center_y(spec, j);
        for (std::size_t k = 0; k < n; ++k) {
            const double ddy = cy - sy[k];
            row_dy2[k] = ddy * ddy;
        }
        const std::size_t row = static_cast<std::size_t>(j) * width;
        for (int i = 0; i < spec.width_cells; ++i) {
            const double cx = cell_center_x(spec, i);
            std::size_t best = 0;
            double ddx = cx - sx[0];
            double best_d2 = ddx * ddx + row_dy2[0];
            for (std::size_t k = 1; k < n; ++k) {
                ddx = cx - sx[k];
                const double d2 = ddx * ddx + row_dy2[k];
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = k;
                }
            }
            values[row + i] = sign[best];
            layer.distances[row + i] = std::sqrt(best_d2);
        }
    }
    return layer;
}

double decay_multiplier(double distance, double xi, double decay_scale) {
    return std::pow(xi, 1.0 - distance / decay_scale);
}

std::vector<double> apply_distance_decay(std::span<const double> values,
                                         std::span<const double> distances, double xi,
                                         double decay_scale) {
    if (values.size() != distances.size()) {
        throw ParameterError("decay needs one distance per cell");
    }
    if (!(std::isfinite(xi) && xi > 0.0)) throw ParameterError("xi must be positive and finite");
    std::vector<double> out(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        out[k] = values[k] * decay_multiplier(distances[k], xi, decay_scale);
    }
    return out;
}

std::vector<double> moving_average_pass(std::span<const double> values, int width, int height,
                                        int tau, bool horizontal) {
    if (values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw ParameterError("smoothing input does not match grid size");
    }
    std::vector<double> out(values.begin(), values.end());
    const int h = tau / 2;
    if (h == 0) return out;

    const int lines = horizontal ? height : width;
    const int length = horizontal ? width : height;
    const std::size_t stride = horizontal ? 1 : static_cast<std::size_t>(width);
    for (int line = 0; line < lines; ++line) {
        const std::size_t base = horizontal ? static_cast<std::size_t>(line) * width
                                            : static_cast<std::size_t>(line);
        for (int k = 0; k < length; ++k) {
            const int lo = std::max(0, k - h);
            const int hi = std::min(length - 1, k + h);
            double sum = 0.0;
            double lo_v = values[base + lo * stride];
            double hi_v = lo_v;
            for (int m = lo; m <= hi; ++m) {
                const double v = values[base + m * stride];
                sum += v;
                lo_v = std::min(lo_v, v);
                hi_v = std::max(hi_v, v);
            }
            // The exact mean lies inside the window's range; the clamp only
            // removes rounding drift so constants stay fixed points.
            out[base + k * stride] = std::clamp(sum / (hi - lo + 1), lo_v, hi_v);
        }
    }
    return out;
}

std::vector<double> smooth(std::span<const double> values, int width, int height, int tau) {
    std::vector<double> out(values.begin(), values.end());
    if (tau <= 1) return out;
    for (int round = 0; round < 2; ++round) {
        out = moving_average_pass(out, width, height, tau, true);
        out = moving_average_pass(out, width, height, tau, false);
    }
    return out;
}

ControlGrid compute_control(const Frame& frame, const ModelParams& params) {
    params.validate();
    if (frame.players.empty()) throw EmptyFrameError();

    const auto& spec = params.spec;
    std::vector<double> total(spec.cell_count(), 0.0);
    for (int eta : params.lags) {
        const auto layer = voronoi_layer(frame, eta, spec);
        if (params.decay_active()) {
            const auto weighted = apply_distance_decay(layer.owner.values(), layer.distances,
                                                       *params.xi, params.decay_scale);
            for (std::size_t k = 0; k < total.size(); ++k) total[k] += weighted[k];
        } else {
            const auto owner = layer.owner.values();
            for (std::size_t k = 0; k < total.size(); ++k) total[k] += owner[k];
        }
    }

    double scale = static_cast<double>(params.lags.size());
    if (params.decay_active()) {
        scale = 0.0;
        for (double v : total) scale = std::max(scale, std::abs(v));
    }
    if (scale > 0.0) {
        for (double& v : total) v /= scale;
    }

    if (params.smoothing_active()) {
        total = smooth(total, spec.width_cells, spec.height_cells, *params.tau);
    }
    return ControlGrid(spec, std::move(total));
}

}  // namespace pitchctl
