#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pitchctl/grid.hpp"
#include "pitchctl/tracking.hpp"

namespace pitchctl {

/// Parameters of the lagged nearest-neighbour model.
///
/// `lags` lists how many frames each player's current velocity is
/// extrapolated for; one Voronoi layer is built per lag. `xi` controls the
/// distance decay `xi^(1 - s/decay_scale)` and is inactive when absent or 1.
/// `tau` is the smoothing window and is inactive when absent or 1.
struct ModelParams {
    std::vector<int> lags{0};
    std::optional<double> xi;
    std::optional<int> tau;
    double decay_scale = 40.0;
    GridSpec spec{};

    bool decay_active() const { return xi.has_value() && *xi != 1.0; }
    bool smoothing_active() const { return tau.has_value() && *tau > 1; }
    void validate() const;
};

struct LaggedPosition {
    std::size_t player_index = 0;
    double x = 0.0;
    double y = 0.0;
    Team team = Team::Home;
};

struct NearestResult {
    std::size_t player_index = 0;
    double distance = 0.0;
};

/// Each player moved by `eta` frames of their current velocity. Positions
/// are not clipped to the pitch.
std::vector<LaggedPosition> lagged_positions(const Frame& frame, int eta);

/// Closest position to (x, y); ties go to the smallest player_index.
/// Throws EmptyFrameError when `positions` is empty.
NearestResult nearest_player(double x, double y, std::span<const LaggedPosition> positions);

struct VoronoiLayer {
    ControlGrid owner;               // +1 Home, -1 Away
    std::vector<double> distances;   // nearest distance per cell, same layout
};

VoronoiLayer voronoi_layer(const Frame& frame, int eta, const GridSpec& spec);

double decay_multiplier(double distance, double xi, double decay_scale = 40.0);

/// values[k] * decay_multiplier(distances[k]) for every cell.
std::vector<double> apply_distance_decay(std::span<const double> values,
                                         std::span<const double> distances, double xi,
                                         double decay_scale = 40.0);

/// One centered moving-average pass along rows (horizontal) or columns.
/// The window holds 2*floor(tau/2)+1 cells, truncated at the borders and
/// normalized by the number of cells actually inside.
std::vector<double> moving_average_pass(std::span<const double> values, int width, int height,
                                        int tau, bool horizontal);

/// Row pass then column pass, the pair applied twice. tau <= 1 is the identity.
std::vector<double> smooth(std::span<const double> values, int width, int height, int tau);

/// The full pipeline: one layer per lag, optional decay, sum, normalization
/// into [-1, 1], optional smoothing.
ControlGrid compute_control(const Frame& frame, const ModelParams& params);

}  // namespace pitchctl
