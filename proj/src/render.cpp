#include "pitchctl/render.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "pitchctl/error.hpp"

namespace pitchctl {

namespace {

std::uint8_t fade(std::uint8_t channel, double amount) {
    const double removed = std::floor(amount * (255.0 - channel) + 0.5);
    return static_cast<std::uint8_t>(255.0 - removed);
}

void draw_disc(Image& img, double cx, double cy, double radius, Rgb fill, Rgb outline) {
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
    const int x1 = std::min(img.width - 1, static_cast<int>(std::ceil(cx + radius)));
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
    const int y1 = std::min(img.height - 1, static_cast<int>(std::ceil(cy + radius)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const double d = std::hypot(x + 0.5 - cx, y + 0.5 - cy);
            if (d <= radius - 1.0) img.set_pixel(x, y, fill);
            else if (d <= radius) img.set_pixel(x, y, outline);
        }
    }
}

}  // namespace

Rgb colormap(double value, const RenderOptions& opts) {
    const double v = std::isnan(value) ? 0.0 : std::clamp(value, -1.0, 1.0);
    const Rgb& target = v >= 0.0 ? opts.home_color : opts.away_color;
    const double t = std::abs(v);
    return {fade(target.r, t), fade(target.g, t), fade(target.b, t)};
}

Rgb Image::pixel(int x, int y) const {
    const auto k = (static_cast<std::size_t>(y) * width + x) * 3;
    return {pixels[k], pixels[k + 1], pixels[k + 2]};
}

void Image::set_pixel(int x, int y, Rgb color) {
    const auto k = (static_cast<std::size_t>(y) * width + x) * 3;
    pixels[k] = color.r;
    pixels[k + 1] = color.g;
    pixels[k + 2] = color.b;
}

Image render_image(const ControlGrid& grid, const Frame* frame, const RenderOptions& opts) {
    const int ppc = opts.output_pixels_per_cell;
    if (ppc < 1) throw ParameterError("pixels per cell must be >= 1");

    Image img;
    img.width = grid.width() * ppc;
    img.height = grid.height() * ppc;
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 3);

    for (int y = 0; y < img.height; ++y) {
        const int j = grid.height() - 1 - y / ppc;
        for (int x = 0; x < img.width; ++x) {
            img.set_pixel(x, y, colormap(grid.at(x / ppc, j), opts));
        }
    }

    if (frame) {
        const auto& spec = grid.spec();
        const double px_per_m_x = img.width / spec.pitch_length;
        const double px_per_m_y = img.height / spec.pitch_width;
        const double radius = std::max(2.5, 0.8 * std::min(px_per_m_x, px_per_m_y));
        auto to_image = [&](double x, double y) {
            return std::pair{x * px_per_m_x, (spec.pitch_width - y) * px_per_m_y};
        };
        const Rgb black{0, 0, 0};
        if (opts.draw_players) {
            for (const auto& p : frame->players) {
                const auto [cx, cy] = to_image(p.x, p.y);
                draw_disc(img, cx, cy, radius, p.team == Team::Home ? opts.home_color : opts.away_color, black);
            }
        }
        if (opts.draw_ball && frame->ball) {
            const auto [cx, cy] = to_image(frame->ball->x, frame->ball->y);
            draw_disc(img, cx, cy, std::max(2.0, 0.6 * radius), Rgb{255, 255, 255}, black);
        }
    }
    return img;
}

void render_png(const ControlGrid& grid, const Frame* frame, const RenderOptions& opts,
                std::ostream& sink) {
    const auto bytes = encode_png(render_image(grid, frame, opts));
    sink.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    sink.flush();
    if (!sink) throw IoError("failed to write PNG");
}

}  // namespace pitchctl
