#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pitchctl/grid.hpp"
#include "pitchctl/tracking.hpp"

namespace pitchctl {

struct ComparisonStats {
    std::size_t cells = 0;
    std::size_t sign_agreements = 0;
    double abs_diff_sum = 0.0;
    double max_abs_diff = 0.0;

    double sign_agreement() const;
    double mean_abs_diff() const;
    void merge(const ComparisonStats& other);
};

/// Compares two grids of the same spec cell by cell. When `mask` is
/// non-empty only cells with mask[k] set are counted. Signs are compared
/// in {-1, 0, +1}.
ComparisonStats compare_grids(const ControlGrid& a, const ControlGrid& b,
                              std::span<const bool> mask = {});

ControlGrid difference_grid(const ControlGrid& a, const ControlGrid& b);

/// True for cells whose nearest Home and nearest Away player (current
/// positions) differ in distance by more than `margin` meters. Frames with a
/// single team mark every cell.
std::vector<bool> bisector_mask(const Frame& frame, const GridSpec& spec, double margin);

}  // namespace pitchctl
