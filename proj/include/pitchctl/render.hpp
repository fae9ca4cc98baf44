#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pitchctl/grid.hpp"
#include "pitchctl/tracking.hpp"

namespace pitchctl {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

struct RenderOptions {
    int output_pixels_per_cell = 8;
    bool draw_players = true;
    bool draw_ball = true;
    Rgb home_color{0, 0, 255};
    Rgb away_color{255, 0, 0};
};

/// Diverging map: 0 is white, +1 home_color, -1 away_color. Values are
/// clamped to [-1, 1]; each channel fades from white by
/// round_half_up(|v| * (255 - channel)).
Rgb colormap(double value, const RenderOptions& opts = {});

/// 8-bit RGB raster, rows top to bottom.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Rgb pixel(int x, int y) const;
    void set_pixel(int x, int y, Rgb color);
};

/// Rasterizes the grid with y = 0 at the bottom, one ppc x ppc block per cell,
/// then draws player and ball markers from `frame` when given.
Image render_image(const ControlGrid& grid, const Frame* frame, const RenderOptions& opts = {});

/// Deterministic PNG encoding (RGB8, no ancillary chunks, fixed zlib level).
std::vector<std::uint8_t> encode_png(const Image& image);

/// Throws IoError when the sink fails.
void render_png(const ControlGrid& grid, const Frame* frame, const RenderOptions& opts,
                std::ostream& sink);

}  // namespace pitchctl
