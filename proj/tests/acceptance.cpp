// Acceptance suite: one line per criterion, non-zero exit if any gating
// criterion fails. `acceptance --dataset` runs the criteria that need the
// Last Row tracking files and exits 77 when they are not available.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pitchctl/compare.hpp"
#include "pitchctl/knn_engine.hpp"
#include "pitchctl/model.hpp"
#include "pitchctl/render.hpp"
#include "pitchctl/spearman.hpp"
#include "pitchctl/synthetic.hpp"
#include "pitchctl/tracking.hpp"
#include "png_decode.hpp"

namespace fs = std::filesystem;
using namespace pitchctl;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(bool ok, const char* id, const std::string& detail, bool gating = true) {
    const char* tag = ok ? "PASS" : (gating ? "FAIL" : "INFO");
    std::printf("[%s] %s %s\n", tag, id, detail.c_str());
    if (!ok && gating) ++failures;
}

bool equal(const ControlGrid& a, const ControlGrid& b) { return a == b; }

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Frame> random_frames(std::uint64_t seed, int count, double max_step = 0.5) {
    std::mt19937_64 rng(seed);
    SyntheticOptions opts;
    opts.max_step = max_step;
    std::vector<Frame> frames;
    for (int k = 0; k < count; ++k) frames.push_back(random_frame(rng, opts));
    return frames;
}

void ac1_voronoi_oracle() {
    const auto t0 = Clock::now();
    const GridSpec spec;
    std::size_t cells = 0;
    std::size_t matching = 0;
    std::vector<double> signs;
    std::vector<double> distances;
    for (const auto& frame : random_frames(1001, 100)) {
        const auto layer = voronoi_layer(frame, 0, spec);
        oracle::voronoi(frame, 0, spec, signs, distances);
        for (std::size_t k = 0; k < signs.size(); ++k) {
            ++cells;
            matching += layer.owner.values()[k] == signs[k] && layer.distances[k] == distances[k];
        }
    }
    const double elapsed = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "voronoi layer vs brute-force scan: %zu/%zu cells identical, %.2f s (limit 10 s)",
                  matching, cells, elapsed);
    report(matching == cells && elapsed < 10.0, "AC1", buf);
}

void ac2_identity_parameters() {
    const GridSpec spec;
    int checked = 0;
    bool ok = true;
    for (const auto& frame : random_frames(1002, 25)) {
        ModelParams base;
        base.lags = {0, 10, 25};
        base.tau = 6;
        ModelParams xi_one = base;
        xi_one.xi = 1.0;
        ok &= equal(compute_control(frame, xi_one), compute_control(frame, base));

        ModelParams decay;
        decay.lags = {0, 10, 25};
        decay.xi = 350.0;
        ModelParams tau_one = decay;
        tau_one.tau = 1;
        ok &= equal(compute_control(frame, tau_one), compute_control(frame, decay));

        ModelParams lag_zero;
        lag_zero.lags = {0};
        ok &= equal(compute_control(frame, lag_zero), voronoi_layer(frame, 0, spec).owner);
        ++checked;
    }
    for (const auto& frame : random_frames(1003, 25, 0.0)) {
        ModelParams multi;
        multi.lags = {0, 10, 25};
        multi.tau = 6;
        ModelParams single = multi;
        single.lags = {0};
        ok &= equal(compute_control(frame, multi), compute_control(frame, single));
    }
    report(ok, "AC2", "xi=1, tau=1, lags=[0] and stationary multi-lag collapse bitwise equal on " +
                          std::to_string(checked) + "+25 frames");
}

void ac3_range_antisymmetry() {
    double worst_range = 0.0;
    double worst_swap = 0.0;
    for (const auto& frame : random_frames(1004, 100)) {
        const auto swapped = swap_teams(frame);
        for (auto preset : {Preset::Voronoi, Preset::SpearmanLike, Preset::FernandezLike}) {
            const auto params = preset_params(preset);
            const auto a = compute_control(frame, params);
            const auto b = compute_control(swapped, params);
            for (std::size_t k = 0; k < a.size(); ++k) {
                worst_range = std::max(worst_range, std::abs(a.values()[k]));
                worst_swap = std::max(worst_swap, std::abs(a.values()[k] + b.values()[k]));
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "100 frames x 3 presets: max |value| = %.17g, max |a + swap(a)| = %.3g (tol 1e-12)",
                  worst_range, worst_swap);
    report(worst_range <= 1.0 && worst_swap <= 1e-12, "AC3", buf);
}

void ac4_decay_spot_values() {
    bool ok = true;
    for (double xi : {350.0, 2.0, 7.5}) {
        ok &= decay_multiplier(0.0, xi) == xi;
        ok &= decay_multiplier(40.0, xi) == 1.0;
        ok &= decay_multiplier(80.0, xi) == 1.0 / xi;
    }
    report(ok, "AC4", "decay multiplier is xi at s=0, 1 at s=40, 1/xi at s=80 (exact)");
}

void ac5_smoothing_convexity() {
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> size(1, 120);
    std::uniform_int_distribution<int> window(1, 15);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int w = size(rng);
        const int h = size(rng);
        const int tau = window(rng);
        std::vector<double> g(static_cast<std::size_t>(w) * h);
        for (double& v : g) v = u(rng);
        const auto [lo, hi] = std::minmax_element(g.begin(), g.end());
        for (double v : smooth(g, w, h, tau)) ok &= v >= *lo && v <= *hi;
        const std::vector<double> constant(g.size(), g.front());
        ok &= smooth(constant, w, h, tau) == constant;
    }
    report(ok, "AC5", "smoothing stays within [min, max] and fixes constant grids on 100 random grids");
}

void ac6_spearman_limit() {
    const GridSpec spec;
    const double betas[] = {2.5, 5.0, 10.0, 20.0};
    double worst = 1.0;
    bool monotone = true;
    for (const auto& frame : random_frames(1006, 50)) {
        const auto mask = bisector_mask(frame, spec, 0.5);
        const auto layer = voronoi_layer(frame, 0, spec);
        double previous = 0.0;
        for (double beta : betas) {
            SpearmanParams params;
            params.beta = beta;
            const auto g = spearman_grid(frame, params);
            std::size_t agree = 0;
            std::size_t counted = 0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                if (!mask[k]) continue;
                ++counted;
                agree += (g.values()[k] > 0.0) == (layer.owner.values()[k] > 0.0);
            }
            const double fraction = static_cast<double>(agree) / static_cast<double>(counted);
            monotone &= fraction >= previous;
            previous = fraction;
        }
        worst = std::min(worst, previous);
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "beta=20 vs Voronoi sign agreement (gap > 0.5 m): worst frame %.5f (need >= 0.995); "
                  "non-decreasing over beta {2.5,5,10,20}: %s",
                  worst, monotone ? "yes" : "no");
    report(worst >= 0.995 && monotone, "AC6", buf);
}

void ac8_throughput() {
    const auto frames = random_frames(1008, 300);
    const auto params = preset_params(Preset::SpearmanLike);
    std::size_t cells = 0;
    const auto t0 = Clock::now();
    for (const auto& f : frames) cells += compute_control(f, params).size();
    const double fps = static_cast<double>(frames.size()) / seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "spearman_like 105x68 single thread: %.1f frames/s over %zu cells (target >= 200, reported only)",
                  fps, cells);
    report(fps >= 200.0, "AC8", buf, false);
}

// ---------------------------------------------------------------- dataset

std::vector<fs::path> dataset_files() {
    std::vector<fs::path> candidates;
    if (const char* env = std::getenv("PITCHCTL_LAST_ROW")) candidates.emplace_back(env);
    candidates.emplace_back(fs::path(PITCHCTL_SOURCE_DIR) / "data" / "last_row");
    for (const auto& c : candidates) {
        std::error_code ec;
        if (fs::is_regular_file(c, ec)) return {c};
        if (fs::is_directory(c, ec)) {
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(c)) {
                if (e.path().extension() == ".csv") files.push_back(e.path());
            }
            std::sort(files.begin(), files.end());
            if (!files.empty()) return files;
        }
    }
    return {};
}

void ac9_ingestion(const std::vector<Play>& plays) {
    std::size_t outside = 0;
    bool telescopes = true;
    for (const auto& play : plays) {
        for (const auto& f : play.frames) {
            for (const auto& p : f.players) {
                outside += p.x < -5.0 || p.x > 110.0 || p.y < -5.0 || p.y > 73.0;
            }
        }
        for (const auto& p0 : play.frames.front().players) {
            double sx = 0.0;
            double sy = 0.0;
            const PlayerState* last = nullptr;
            for (const auto& f : play.frames) {
                const auto it = std::find_if(f.players.begin(), f.players.end(),
                                             [&](const PlayerState& q) { return q.player_id == p0.player_id; });
                if (it == f.players.end()) {
                    last = nullptr;
                    break;
                }
                sx += it->dx;
                sy += it->dy;
                last = &*it;
            }
            if (last) {
                telescopes &= std::abs(sx - (last->x - p0.x)) <= 1e-9 && std::abs(sy - (last->y - p0.y)) <= 1e-9;
            }
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu plays (need 20), %zu positions outside [-5,110]x[-5,73], telescoping %s",
                  plays.size(), outside, telescopes ? "holds" : "fails");
    report(plays.size() == 20 && outside == 0 && telescopes, "AC9", buf);
}

void ac7_figure(const std::vector<Play>& plays) {
    const Play* play = nullptr;
    for (const auto& p : plays) {
        if (p.play_id.find("Real Madrid") != std::string::npos) play = &p;
    }
    const Frame* frame = play ? play->find_frame(132) : nullptr;
    if (!frame) {
        report(false, "AC7", "Real Madrid play frame 132 not found in dataset");
        return;
    }
    const fs::path gallery = fs::current_path() / "gallery";
    fs::create_directories(gallery);
    bool ok = true;
    for (auto preset : {Preset::Voronoi, Preset::SpearmanLike, Preset::FernandezLike}) {
        const auto grid = compute_control(*frame, preset_params(preset));
        const auto png = encode_png(render_image(grid, frame, {}));
        const auto path = gallery / (std::string("real_madrid_frame132_") + preset_name(preset) + ".png");
        std::ofstream(path, std::ios::binary).write(reinterpret_cast<const char*>(png.data()),
                                                    static_cast<std::streamsize>(png.size()));
        const auto decoded = decode_png(png);
        ok &= decoded && decoded->width == 105 * 8 && decoded->height == 68 * 8;
    }
    report(ok, "AC7", "rendered 3 preset heatmaps to " + gallery.string() +
                          " (sign pattern vs the published figure is a manual check)");
}

int run_dataset() {
    const auto files = dataset_files();
    if (files.empty()) {
        std::printf("[SKIP] AC7 Last Row files not found (set PITCHCTL_LAST_ROW or add data/last_row/*.csv)\n");
        std::printf("[SKIP] AC9 Last Row files not found\n");
        return 77;
    }
    std::vector<Play> plays;
    for (const auto& f : files) {
        for (auto& p : parse_tracking_file(f.string())) plays.push_back(std::move(p));
    }
    ac9_ingestion(plays);
    ac7_figure(plays);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::string(argv[1]) == "--dataset") return run_dataset();

    ac1_voronoi_oracle();
    ac2_identity_parameters();
    ac3_range_antisymmetry();
    ac4_decay_spot_values();
    ac5_smoothing_convexity();
    ac6_spearman_limit();
    ac8_throughput();
    std::printf("[INFO] AC7 AC9 need the tracking dataset; see the acceptance_dataset test\n");
    std::printf("%s: %d gating failure(s)\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
