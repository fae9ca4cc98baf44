#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pitchctl {

/// Sampling geometry of a control surface. Cells are sampled at their centers.
struct GridSpec {
    int width_cells = 105;
    int height_cells = 68;
    double pitch_length = 105.0;
    double pitch_width = 68.0;

    std::size_t cell_count() const {
        return static_cast<std::size_t>(width_cells) * static_cast<std::size_t>(height_cells);
    }
    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

/// Parses "WxH" (e.g. "105x68") on the default pitch.
GridSpec parse_grid_size(const std::string& text);

// Both helpers use the exact expression of cell_center so that callers
// computing centers row by row agree bit-for-bit with cell_center.
inline double cell_center_x(const GridSpec& spec, int i) {
    return (i + 0.5) * spec.pitch_length / spec.width_cells;
}
inline double cell_center_y(const GridSpec& spec, int j) {
    return (j + 0.5) * spec.pitch_width / spec.height_cells;
}

/// Center of column i, row j in meters. Throws BoundsError when out of range.
std::pair<double, double> cell_center(const GridSpec& spec, int i, int j);

/// Signed control surface: positive values favour Home, negative Away.
/// Storage is row-major with row j = 0 nearest y = 0.
class ControlGrid {
public:
    ControlGrid() : ControlGrid(GridSpec{}) {}
    explicit ControlGrid(const GridSpec& spec, double fill = 0.0);
    ControlGrid(const GridSpec& spec, std::vector<double> values);

    const GridSpec& spec() const { return spec_; }
    int width() const { return spec_.width_cells; }
    int height() const { return spec_.height_cells; }
    std::size_t size() const { return values_.size(); }

    double& at(int i, int j) { return values_[index(i, j)]; }
    double at(int i, int j) const { return values_[index(i, j)]; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    bool operator==(const ControlGrid&) const = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(spec_.width_cells) +
               static_cast<std::size_t>(i);
    }

    GridSpec spec_;
    std::vector<double> values_;
};

enum class GridFormat { Csv, Json };

/// "csv" / "json"; throws ParameterError otherwise.
GridFormat parse_grid_format(const std::string& text);
/// Picks JSON for a ".json" extension and CSV for anything else.
GridFormat grid_format_for_path(const std::string& path);
const char* extension(GridFormat format);

void export_grid(const ControlGrid& grid, GridFormat format, std::ostream& out);
std::string export_grid(const ControlGrid& grid, GridFormat format);
ControlGrid import_grid(std::istream& in, GridFormat format);

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

}  // namespace pitchctl
