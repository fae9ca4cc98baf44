#include "pitchctl/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pitchctl/error.hpp"

namespace pitchctl {

double ComparisonStats::sign_agreement() const {
    return cells == 0 ? 1.0 : static_cast<double>(sign_agreements) / static_cast<double>(cells);
}

double ComparisonStats::mean_abs_diff() const {
    return cells == 0 ? 0.0 : abs_diff_sum / static_cast<double>(cells);
}

void ComparisonStats::merge(const ComparisonStats& other) {
    cells += other.cells;
    sign_agreements += other.sign_agreements;
    abs_diff_sum += other.abs_diff_sum;
    max_abs_diff = std::max(max_abs_diff, other.max_abs_diff);
}

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

ComparisonStats compare_grids(const ControlGrid& a, const ControlGrid& b, std::span<const bool> mask) {
    if (!(a.spec() == b.spec())) throw ParameterError("cannot compare grids with different specs");
    if (!mask.empty() && mask.size() != a.size()) throw ParameterError("mask does not match grid size");
    ComparisonStats s;
    const auto va = a.values();
    const auto vb = b.values();
    for (std::size_t k = 0; k < va.size(); ++k) {
        if (!mask.empty() && !mask[k]) continue;
        const double d = std::abs(va[k] - vb[k]);
        ++s.cells;
        s.sign_agreements += sign_of(va[k]) == sign_of(vb[k]);
        s.abs_diff_sum += d;
        s.max_abs_diff = std::max(s.max_abs_diff, d);
    }
    return s;
}

ControlGrid difference_grid(const ControlGrid& a, const ControlGrid& b) {
    if (!(a.spec() == b.spec())) throw ParameterError("cannot subtract grids with different specs");
    ControlGrid out(a.spec());
    auto v = out.values();
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values()[k] - b.values()[k];
    return out;
}

std::vector<bool> bisector_mask(const Frame& frame, const GridSpec& spec, double margin) {
    spec.validate();
    std::vector<bool> mask(spec.cell_count(), true);
    for (int j = 0; j < spec.height_cells; ++j) {
        const double cy = cell_center_y(spec, j);
        for (int i = 0; i < spec.width_cells; ++i) {
            const double cx = cell_center_x(spec, i);
            double home = std::numeric_limits<double>::infinity();
            double away = home;
            for (const auto& p : frame.players) {
                const double d = std::hypot(cx - p.x, cy - p.y);
                if (p.team == Team::Home) home = std::min(home, d);
                else away = std::min(away, d);
            }
            if (std::isfinite(home) && std::isfinite(away)) {
                mask[static_cast<std::size_t>(j) * spec.width_cells + i] = std::abs(home - away) > margin;
            }
        }
    }
    return mask;
}

}  // namespace pitchctl
