#pragma once

#include <optional>
#include <string>

#include "pitchctl/grid.hpp"
#include "pitchctl/knn_engine.hpp"
#include "pitchctl/spearman.hpp"
#include "pitchctl/tracking.hpp"

namespace pitchctl {

/// Named parameterizations of the lagged nearest-neighbour model.
enum class Preset { Voronoi, SpearmanLike, FernandezLike };

std::optional<Preset> parse_preset(const std::string& name);
const char* preset_name(Preset preset);
ModelParams preset_params(Preset preset, const GridSpec& spec = {});

/// Either a nearest-neighbour model or the potential-field baseline.
struct ModelSpec {
    enum class Kind { Knn, Spearman };
    Kind kind = Kind::Knn;
    ModelParams knn{};
    SpearmanParams spearman{};

    static ModelSpec from_knn(ModelParams params);
    static ModelSpec from_spearman(SpearmanParams params);

    const GridSpec& spec() const { return kind == Kind::Knn ? knn.spec : spearman.spec; }
};

ControlGrid evaluate(const ModelSpec& model, const Frame& frame);

/// One-line, fully expanded parameter description, e.g.
/// "knn lags=[0,10,25] xi=350 tau=6 decay_scale=40 grid=105x68".
std::string describe(const ModelParams& params);
std::string describe(const SpearmanParams& params);
std::string describe(const ModelSpec& model);

}  // namespace pitchctl
