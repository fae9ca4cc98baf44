#include "pitchctl/grid.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include "json.hpp"
#include <ostream>
#include <sstream>

#include "csv.hpp"
#include "pitchctl/error.hpp"

namespace pitchctl {

void GridSpec::validate() const {
    if (width_cells < 1 || height_cells < 1) {
        throw ParameterError("grid needs at least one cell in each direction");
    }
    if (!(pitch_length > 0.0) || !(pitch_width > 0.0) || !std::isfinite(pitch_length) ||
        !std::isfinite(pitch_width)) {
        throw ParameterError("pitch dimensions must be positive and finite");
    }
}

GridSpec parse_grid_size(const std::string& text) {
    const auto x = text.find_first_of("xX");
    GridSpec spec;
    auto parse_int = [&](std::string_view s, int& out) {
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    if (x == std::string::npos ||
        !parse_int(std::string_view(text).substr(0, x), spec.width_cells) ||
        !parse_int(std::string_view(text).substr(x + 1), spec.height_cells)) {
        throw ParameterError("grid size must look like WxH, got '" + text + "'");
    }
    spec.validate();
    return spec;
}

std::pair<double, double> cell_center(const GridSpec& spec, int i, int j) {
    if (i < 0 || i >= spec.width_cells || j < 0 || j >= spec.height_cells) {
        throw BoundsError("cell (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside " + std::to_string(spec.width_cells) + "x" +
                          std::to_string(spec.height_cells) + " grid");
    }
    return {cell_center_x(spec, i), cell_center_y(spec, j)};
}

ControlGrid::ControlGrid(const GridSpec& spec, double fill) : spec_(spec) {
    spec_.validate();
    values_.assign(spec_.cell_count(), fill);
}

ControlGrid::ControlGrid(const GridSpec& spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
    spec_.validate();
    if (values_.size() != spec_.cell_count()) {
        throw ParameterError("grid expects " + std::to_string(spec_.cell_count()) +
                             " values, got " + std::to_string(values_.size()));
    }
}

GridFormat parse_grid_format(const std::string& text) {
    if (text == "csv") return GridFormat::Csv;
    if (text == "json") return GridFormat::Json;
    throw ParameterError("grid format must be csv or json, got '" + text + "'");
}

GridFormat grid_format_for_path(const std::string& path) {
    return path.ends_with(".json") ? GridFormat::Json : GridFormat::Csv;
}

const char* extension(GridFormat format) { return format == GridFormat::Json ? "json" : "csv"; }

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

void export_grid(const ControlGrid& grid, GridFormat format, std::ostream& out) {
    const auto& spec = grid.spec();
    if (format == GridFormat::Json) {
        nlohmann::json j;
        j["width_cells"] = spec.width_cells;
        j["height_cells"] = spec.height_cells;
        j["pitch_length"] = spec.pitch_length;
        j["pitch_width"] = spec.pitch_width;
        j["values"] = std::vector<double>(grid.values().begin(), grid.values().end());
        out << j.dump() << '\n';
        return;
    }
    out << "# width_cells=" << spec.width_cells << '\n'
        << "# height_cells=" << spec.height_cells << '\n'
        << "# pitch_length=" << format_double(spec.pitch_length) << '\n'
        << "# pitch_width=" << format_double(spec.pitch_width) << '\n';
    for (int j = 0; j < grid.height(); ++j) {
        for (int i = 0; i < grid.width(); ++i) {
            if (i) out << ',';
            out << format_double(grid.at(i, j));
        }
        out << '\n';
    }
}

std::string export_grid(const ControlGrid& grid, GridFormat format) {
    std::ostringstream os;
    export_grid(grid, format, os);
    return os.str();
}

namespace {

ControlGrid import_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid grid JSON: ") + e.what());
    }
    GridSpec spec;
    std::vector<double> values;
    try {
        for (const char* key : {"width_cells", "height_cells", "pitch_length", "pitch_width", "values"}) {
            if (!j.contains(key)) throw FormatError(std::string("grid JSON lacks '") + key + "'");
        }
        spec.width_cells = j.at("width_cells").get<int>();
        spec.height_cells = j.at("height_cells").get<int>();
        spec.pitch_length = j.at("pitch_length").get<double>();
        spec.pitch_width = j.at("pitch_width").get<double>();
        values = j.at("values").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid grid JSON: ") + e.what());
    }
    try {
        spec.validate();
    } catch (const ParameterError& e) {
        throw FormatError(e.what());
    }
    if (values.size() != spec.cell_count()) {
        throw FormatError("grid JSON holds " + std::to_string(values.size()) + " values, expected " +
                          std::to_string(spec.cell_count()));
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw FormatError("grid JSON holds a non-finite value");
    }
    return ControlGrid(spec, std::move(values));
}

ControlGrid import_csv(std::istream& in) {
    std::map<std::string, std::string> meta;
    std::vector<double> values;
    std::string line;
    int line_no = 0;
    std::size_t row_length = 0;
    std::size_t rows = 0;
    while (detail::read_line(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const auto body = detail::trim(text.substr(1));
            const auto eq = body.find('=');
            if (eq != std::string_view::npos) {
                meta[std::string(detail::trim(body.substr(0, eq)))] =
                    std::string(detail::trim(body.substr(eq + 1)));
            }
            continue;
        }
        std::size_t count = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            const auto cell = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            const auto v = detail::parse_double(cell);
            if (!v) {
                throw FormatError("line " + std::to_string(line_no) + ": malformed value '" +
                                  std::string(cell) + "'");
            }
            values.push_back(*v);
            ++count;
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (rows == 0) row_length = count;
        else if (count != row_length) {
            throw FormatError("line " + std::to_string(line_no) + ": ragged row of " +
                              std::to_string(count) + " values, expected " + std::to_string(row_length));
        }
        ++rows;
    }

    GridSpec spec;
    auto need = [&](const char* key) -> const std::string& {
        const auto it = meta.find(key);
        if (it == meta.end()) throw FormatError(std::string("grid CSV lacks '# ") + key + "=' metadata");
        return it->second;
    };
    auto as_number = [&](const char* key) {
        const auto v = detail::parse_double(need(key));
        if (!v) throw FormatError(std::string("grid CSV metadata '") + key + "' is not a number");
        return *v;
    };
    const double w = as_number("width_cells");
    const double h = as_number("height_cells");
    if (w != std::floor(w) || h != std::floor(h) || w < 1 || h < 1 || w > 1e7 || h > 1e7) {
        throw FormatError("grid CSV cell counts must be positive integers");
    }
    spec.width_cells = static_cast<int>(w);
    spec.height_cells = static_cast<int>(h);
    spec.pitch_length = as_number("pitch_length");
    spec.pitch_width = as_number("pitch_width");
    try {
        spec.validate();
    } catch (const ParameterError& e) {
        throw FormatError(e.what());
    }
    if (rows != static_cast<std::size_t>(spec.height_cells) ||
        row_length != static_cast<std::size_t>(spec.width_cells)) {
        throw FormatError("grid CSV body is " + std::to_string(row_length) + "x" +
                          std::to_string(rows) + ", metadata says " + std::to_string(spec.width_cells) +
                          "x" + std::to_string(spec.height_cells));
    }
    return ControlGrid(spec, std::move(values));
}

}  // namespace

ControlGrid import_grid(std::istream& in, GridFormat format) {
    return format == GridFormat::Json ? import_json(in) : import_csv(in);
}

}  // namespace pitchctl
