#include "pitchctl/model.hpp"

#include <sstream>

namespace pitchctl {

std::optional<Preset> parse_preset(const std::string& name) {
    if (name == "voronoi") return Preset::Voronoi;
    if (name == "spearman_like") return Preset::SpearmanLike;
    if (name == "fernandez_like") return Preset::FernandezLike;
    return std::nullopt;
}

const char* preset_name(Preset preset) {
    switch (preset) {
        case Preset::Voronoi: return "voronoi";
        case Preset::SpearmanLike: return "spearman_like";
        case Preset::FernandezLike: return "fernandez_like";
    }
    return "?";
}

ModelParams preset_params(Preset preset, const GridSpec& spec) {
    ModelParams p;
    p.spec = spec;
    switch (preset) {
        case Preset::Voronoi:
            p.lags = {0};
            break;
        case Preset::SpearmanLike:
            p.lags = {0, 10, 25};
            p.tau = 6;
            break;
        case Preset::FernandezLike:
            p.lags = {0, 10, 25};
            p.xi = 350.0;
            p.tau = 6;
            break;
    }
    return p;
}

ModelSpec ModelSpec::from_knn(ModelParams params) {
    ModelSpec m;
    m.kind = Kind::Knn;
    m.knn = std::move(params);
    m.spearman.spec = m.knn.spec;
    return m;
}

ModelSpec ModelSpec::from_spearman(SpearmanParams params) {
    ModelSpec m;
    m.kind = Kind::Spearman;
    m.spearman = params;
    m.knn.spec = params.spec;
    return m;
}

ControlGrid evaluate(const ModelSpec& model, const Frame& frame) {
    return model.kind == ModelSpec::Kind::Knn ? compute_control(frame, model.knn)
                                              : spearman_grid(frame, model.spearman);
}

namespace {

std::string grid_text(const GridSpec& s) {
    std::ostringstream os;
    os << s.width_cells << 'x' << s.height_cells;
    if (s.pitch_length != 105.0 || s.pitch_width != 68.0) {
        os << " pitch=" << format_double(s.pitch_length) << 'x' << format_double(s.pitch_width);
    }
    return os.str();
}

}  // namespace

std::string describe(const ModelParams& params) {
    std::ostringstream os;
    os << "knn lags=[";
    for (std::size_t k = 0; k < params.lags.size(); ++k) os << (k ? "," : "") << params.lags[k];
    os << "] xi=" << (params.xi ? format_double(*params.xi) : "none")
       << " tau=" << (params.tau ? std::to_string(*params.tau) : "none")
       << " decay_scale=" << format_double(params.decay_scale) << " grid=" << grid_text(params.spec);
    return os.str();
}

std::string describe(const SpearmanParams& params) {
    std::ostringstream os;
    os << "spearman beta=" << format_double(params.beta) << " v_max=" << format_double(params.v_max)
       << " t_floor=" << format_double(params.t_floor) << " grid=" << grid_text(params.spec);
    return os.str();
}

std::string describe(const ModelSpec& model) {
    return model.kind == ModelSpec::Kind::Knn ? describe(model.knn) : describe(model.spearman);
}

}  // namespace pitchctl
