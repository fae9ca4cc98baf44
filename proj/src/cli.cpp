#include "pitchctl/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "csv.hpp"
#include "pitchctl/compare.hpp"
#include "pitchctl/error.hpp"
#include "pitchctl/model.hpp"
#include "pitchctl/render.hpp"
#include "pitchctl/synthetic.hpp"
#include "pitchctl/tracking.hpp"

namespace fs = std::filesystem;

namespace pitchctl::cli {

namespace {

/// Bad or inconsistent flags (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested play or frame does not exist (exit 2).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SourceOptions {
    std::vector<std::string> inputs;
    std::string mapping;
    std::string units;
    bool canonical = false;
    std::string play;
    long frame = -1;
    std::string frame_range;
    bool all_frames = false;
    int synthetic = 0;
    std::uint64_t seed = 1;
    bool swap_teams = false;
};

struct KnnOptions {
    std::string preset;
    std::string lags;
    std::string xi;
    std::string tau;
    double decay_scale = 40.0;
    CLI::Option* decay_scale_opt = nullptr;
};

struct SpearmanOptions {
    std::string baseline;
    double beta = 2.5;
    double v_max = 5.0;
    double t_floor = 0.1;
};

void add_source_options(CLI::App& cmd, SourceOptions& s, bool allow_range) {
    cmd.add_option("--input", s.inputs, "Tracking CSV file(s)");
    cmd.add_option("--mapping", s.mapping, "Column mapping file (key=value lines)");
    cmd.add_option("--units", s.units, "Override coordinate unit: percent or meters")
        ->check(CLI::IsMember({"percent", "meters"}));
    cmd.add_flag("--canonical", s.canonical, "Input uses the canonical schema (meters, home/away/ball tokens)");
    cmd.add_option("--play", s.play, "Play id");
    cmd.add_option("--frame", s.frame, "Frame index")->check(CLI::NonNegativeNumber);
    if (allow_range) cmd.add_option("--frames", s.frame_range, "Frame index range a-b (inclusive)");
    cmd.add_flag("--all-frames", s.all_frames, "Every frame of the play");
    cmd.add_option("--synthetic", s.synthetic, "Use N random 22-player frames instead of --input")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--seed", s.seed, "Seed for --synthetic");
}

void add_knn_options(CLI::App& cmd, KnnOptions& k, const std::string& prefix = "") {
    cmd.add_option("--" + prefix + "preset", k.preset, "voronoi | spearman_like | fernandez_like");
    cmd.add_option("--" + prefix + "lags", k.lags, "Comma-separated lags in frames, e.g. 0,10,25");
    cmd.add_option("--" + prefix + "xi", k.xi, "Distance decay base, or 'none'");
    cmd.add_option("--" + prefix + "tau", k.tau, "Smoothing window, or 'none'");
    k.decay_scale_opt = cmd.add_option("--" + prefix + "decay-scale", k.decay_scale, "Distance decay scale in meters");
}

void add_spearman_options(CLI::App& cmd, SpearmanOptions& s) {
    cmd.add_option("--baseline", s.baseline, "Use a baseline model instead of KNN parameters")
        ->check(CLI::IsMember({"spearman"}));
    cmd.add_option("--beta", s.beta, "Baseline sharpness");
    cmd.add_option("--vmax", s.v_max, "Baseline player speed in m/s");
    cmd.add_option("--t-floor", s.t_floor, "Baseline minimum arrival time in s");
}

std::vector<int> parse_lags(const std::string& text) {
    std::vector<int> lags;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto t = detail::trim(item);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
            throw UsageError("bad lag '" + item + "' in --lags");
        }
        lags.push_back(v);
    }
    if (lags.empty()) throw UsageError("--lags needs at least one value");
    return lags;
}

ModelParams resolve_knn(const KnnOptions& k, const GridSpec& spec, bool required = true) {
    ModelParams p;
    if (!k.preset.empty()) {
        const auto preset = parse_preset(k.preset);
        if (!preset) throw UsageError("unknown preset '" + k.preset + "'");
        p = preset_params(*preset, spec);
    } else if (k.lags.empty() && required) {
        throw UsageError("give --preset or --lags");
    }
    p.spec = spec;
    if (!k.lags.empty()) p.lags = parse_lags(k.lags);
    if (!k.xi.empty()) {
        if (k.xi == "none") p.xi.reset();
        else if (const auto v = detail::parse_double(k.xi)) p.xi = *v;
        else throw UsageError("bad --xi '" + k.xi + "'");
    }
    if (!k.tau.empty()) {
        if (k.tau == "none") {
            p.tau.reset();
        } else {
            const auto v = detail::parse_double(k.tau);
            if (!v || *v != std::floor(*v) || *v < 1 || *v > 1e6) throw UsageError("bad --tau '" + k.tau + "'");
            p.tau = static_cast<int>(*v);
        }
    }
    if (k.decay_scale_opt && k.decay_scale_opt->count()) p.decay_scale = k.decay_scale;
    try {
        p.validate();
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
    return p;
}

ModelSpec resolve_model(const KnnOptions& k, const SpearmanOptions& s, const GridSpec& spec) {
    if (s.baseline == "spearman") {
        SpearmanParams sp{s.beta, s.v_max, s.t_floor, spec};
        try {
            sp.validate();
        } catch (const ParameterError& e) {
            throw UsageError(e.what());
        }
        return ModelSpec::from_spearman(sp);
    }
    return ModelSpec::from_knn(resolve_knn(k, spec));
}

GridSpec resolve_grid(const std::string& text) {
    try {
        return parse_grid_size(text);
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
}

/// One frame to evaluate, with the label used for file names and reports.
struct FrameRef {
    std::string play_id;
    const Frame* frame = nullptr;
};

struct LoadedFrames {
    std::vector<Play> plays;
    std::vector<Frame> owned;
    std::vector<FrameRef> refs;
};

LoadedFrames load_frames(const SourceOptions& s, bool allow_many) {
    LoadedFrames lf;
    if (s.synthetic > 0) {
        if (!s.inputs.empty()) throw UsageError("--synthetic and --input are exclusive");
        std::mt19937_64 rng(s.seed);
        for (int k = 0; k < s.synthetic; ++k) {
            lf.owned.push_back(random_frame(rng));
            lf.owned.back().frame_index = k;
        }
        for (auto& f : lf.owned) {
            if (s.swap_teams) f = swap_teams(std::move(f));
            lf.refs.push_back({"synthetic", &f});
        }
        return lf;
    }
    if (s.inputs.empty()) throw UsageError("--input (or --synthetic) is required");

    if (s.canonical && !s.mapping.empty()) throw UsageError("--canonical and --mapping are exclusive");
    ColumnMapping mapping = s.canonical         ? ColumnMapping::canonical()
                            : s.mapping.empty() ? ColumnMapping{}
                                                : load_column_mapping_file(s.mapping);
    if (s.units == "percent") mapping.unit = CoordinateUnit::Percent;
    if (s.units == "meters") mapping.unit = CoordinateUnit::Meters;
    for (const auto& path : s.inputs) {
        auto plays = parse_tracking_file(path, mapping);
        for (auto& p : plays) lf.plays.push_back(std::move(p));
    }

    const Play* play = nullptr;
    if (s.play.empty()) {
        if (lf.plays.size() != 1) {
            std::string names;
            for (const auto& p : lf.plays) names += "\n  " + p.play_id;
            throw UsageError("input holds " + std::to_string(lf.plays.size()) + " plays; choose one with --play:" + names);
        }
        play = &lf.plays.front();
    } else {
        play = find_play(lf.plays, s.play);
        if (!play) throw DataError("unknown play '" + s.play + "'");
    }

    const int selectors = (s.frame >= 0) + !s.frame_range.empty() + s.all_frames;
    if (selectors != 1) throw UsageError("give exactly one of --frame, --frames, --all-frames");
    if (!allow_many && selectors == 1 && s.frame < 0) throw UsageError("this command takes a single --frame");

    std::vector<const Frame*> frames;
    if (s.all_frames) {
        for (const auto& f : play->frames) frames.push_back(&f);
    } else if (s.frame >= 0) {
        const auto* f = play->find_frame(s.frame);
        if (!f) throw DataError("play '" + play->play_id + "' has no frame " + std::to_string(s.frame));
        frames.push_back(f);
    } else {
        const auto dash = s.frame_range.find('-');
        const auto lo = detail::parse_double(s.frame_range.substr(0, dash));
        const auto hi = dash == std::string::npos ? lo : detail::parse_double(s.frame_range.substr(dash + 1));
        if (!lo || !hi || *hi < *lo) throw UsageError("--frames must look like a-b");
        for (const auto& f : play->frames) {
            if (f.frame_index >= *lo && f.frame_index <= *hi) frames.push_back(&f);
        }
        if (frames.empty()) throw DataError("play '" + play->play_id + "' has no frames in " + s.frame_range);
    }

    if (s.swap_teams) {
        lf.owned.reserve(frames.size());
        for (const auto* f : frames) lf.owned.push_back(swap_teams(*f));
        for (const auto& f : lf.owned) lf.refs.push_back({play->play_id, &f});
    } else {
        for (const auto* f : frames) lf.refs.push_back({play->play_id, f});
    }
    return lf;
}

/// Runs fn(k) for k in [0, n) on up to `threads` workers; rethrows the first failure.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn fn) {
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || n <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, n); ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < n; k = next++) {
                try {
                    fn(k);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::string slug(const std::string& text) {
    std::string out;
    for (char c : text) {
        const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-';
        if (keep) out += c;
        else if (out.empty() || out.back() != '_') out += '_';
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out.empty() ? "play" : out;
}

/// Output file for `ref`: `out` itself for a single frame written to a file
/// path, otherwise `<out>/<play>_frame<n>.<ext>`.
std::vector<fs::path> output_paths(const std::string& out, const std::vector<FrameRef>& refs,
                                   const std::string& ext) {
    if (out.empty()) throw UsageError("--out is required");
    const bool as_dir = refs.size() > 1 || fs::is_directory(out) || out.back() == '/';
    std::vector<fs::path> paths;
    if (!as_dir) {
        paths.emplace_back(out);
        return paths;
    }
    fs::create_directories(out);
    for (const auto& r : refs) {
        paths.push_back(fs::path(out) / (slug(r.play_id) + "_frame" + std::to_string(r.frame->frame_index) + "." + ext));
    }
    return paths;
}

void write_file(const fs::path& path, const std::string& bytes) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.close();
    if (!f) throw IoError("cannot write '" + path.string() + "'");
}

std::vector<ControlGrid> evaluate_all(const ModelSpec& model, const std::vector<FrameRef>& refs, int threads) {
    std::vector<ControlGrid> grids(refs.size(), ControlGrid(model.spec()));
    parallel_for(refs.size(), threads, [&](std::size_t k) { grids[k] = evaluate(model, *refs[k].frame); });
    return grids;
}

int cmd_compute(const SourceOptions& src, const KnnOptions& knn, const SpearmanOptions& sp,
                const std::string& grid, const std::string& out, const std::string& format,
                int threads, std::ostream& log) {
    const auto model = resolve_model(knn, sp, resolve_grid(grid));
    const auto fmt = parse_grid_format(format);
    const auto frames = load_frames(src, true);
    const auto paths = output_paths(out, frames.refs, extension(fmt));
    log << "model: " << describe(model) << '\n';
    const auto grids = evaluate_all(model, frames.refs, threads);
    for (std::size_t k = 0; k < grids.size(); ++k) write_file(paths[k], export_grid(grids[k], fmt));
    log << "wrote " << grids.size() << " grid file(s)\n";
    return kOk;
}

std::string render_bytes(const ControlGrid& grid, const Frame* frame, const RenderOptions& opts) {
    const auto png = encode_png(render_image(grid, frame, opts));
    return std::string(png.begin(), png.end());
}

int cmd_render(const SourceOptions& src, const KnnOptions& knn, const SpearmanOptions& sp,
               const std::string& grid_size, const std::string& grid_file, const std::string& out,
               const RenderOptions& opts, int threads, std::ostream& log) {
    if (!grid_file.empty()) {
        std::ifstream in(grid_file, std::ios::binary);
        if (!in) throw IoError("cannot open grid file '" + grid_file + "'");
        const auto grid = import_grid(in, grid_format_for_path(grid_file));
        std::optional<LoadedFrames> frames;
        if (!src.inputs.empty() || src.synthetic > 0) frames = load_frames(src, false);
        const Frame* frame = frames ? frames->refs.front().frame : nullptr;
        if (out.empty()) throw UsageError("--out is required");
        write_file(out, render_bytes(grid, frame, opts));
        log << "wrote 1 image\n";
        return kOk;
    }
    const auto model = resolve_model(knn, sp, resolve_grid(grid_size));
    const auto frames = load_frames(src, true);
    const auto paths = output_paths(out, frames.refs, "png");
    log << "model: " << describe(model) << '\n';
    const auto grids = evaluate_all(model, frames.refs, threads);
    std::vector<std::string> images(grids.size());
    parallel_for(grids.size(), threads,
                 [&](std::size_t k) { images[k] = render_bytes(grids[k], frames.refs[k].frame, opts); });
    for (std::size_t k = 0; k < images.size(); ++k) write_file(paths[k], images[k]);
    log << "wrote " << images.size() << " image(s)\n";
    return kOk;
}

void print_stats(std::ostream& out, const ComparisonStats& s) {
    out << "cells=" << s.cells << " sign_agreement=" << format_double(s.sign_agreement())
        << " mad=" << format_double(s.mean_abs_diff()) << " max_abs_diff=" << format_double(s.max_abs_diff);
}

int cmd_compare(const SourceOptions& src, const KnnOptions& a_opts, const KnnOptions& b_opts,
                const SpearmanOptions& sp, const std::string& grid_size, double margin,
                const std::string& diff_out, const std::string& format, int threads, std::ostream& out) {
    const auto spec = resolve_grid(grid_size);
    const auto model_a = ModelSpec::from_knn(resolve_knn(a_opts, spec));
    ModelSpec model_b;
    if (sp.baseline == "spearman") {
        model_b = resolve_model({}, sp, spec);
    } else {
        if (b_opts.preset.empty() && b_opts.lags.empty()) {
            throw UsageError("give model B with --b-preset/--b-lags or --baseline spearman");
        }
        model_b = ModelSpec::from_knn(resolve_knn(b_opts, spec));
    }
    if (margin < 0.0) throw UsageError("--bisector-margin must be >= 0");
    const auto fmt = parse_grid_format(format);
    const auto frames = load_frames(src, true);
    std::vector<fs::path> diff_paths;
    if (!diff_out.empty()) {
        fs::create_directories(diff_out);
        diff_paths = output_paths(diff_out + "/", frames.refs, extension(fmt));
    }

    out << "model_a: " << describe(model_a) << '\n' << "model_b: " << describe(model_b) << '\n';
    const auto grids_a = evaluate_all(model_a, frames.refs, threads);
    const auto grids_b = evaluate_all(model_b, frames.refs, threads);

    ComparisonStats total;
    for (std::size_t k = 0; k < frames.refs.size(); ++k) {
        std::vector<bool> mask;
        if (margin > 0.0) mask = bisector_mask(*frames.refs[k].frame, spec, margin);
        // std::vector<bool> has no contiguous storage; copy into a plain buffer.
        std::unique_ptr<bool[]> flags(new bool[mask.size()]);
        std::copy(mask.begin(), mask.end(), flags.get());
        const auto stats = compare_grids(grids_a[k], grids_b[k], std::span<const bool>(flags.get(), mask.size()));
        total.merge(stats);
        out << "frame play=" << frames.refs[k].play_id << " index=" << frames.refs[k].frame->frame_index << ' ';
        print_stats(out, stats);
        out << '\n';
        if (!diff_paths.empty()) write_file(diff_paths[k], export_grid(difference_grid(grids_a[k], grids_b[k]), fmt));
    }
    out << "aggregate frames=" << frames.refs.size() << ' ';
    print_stats(out, total);
    out << '\n';
    return kOk;
}

double percentile(std::vector<double> sorted, double q) {
    if (sorted.empty()) return 0.0;
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

int cmd_bench(int frame_count, const KnnOptions& knn, const std::string& grid_size, int threads,
              std::uint64_t seed, std::ostream& out) {
    KnnOptions k = knn;
    if (k.preset.empty() && k.lags.empty()) k.preset = "spearman_like";
    const auto model = ModelSpec::from_knn(resolve_knn(k, resolve_grid(grid_size)));

    std::mt19937_64 rng(seed);
    std::vector<Frame> frames;
    frames.reserve(frame_count);
    for (int i = 0; i < frame_count; ++i) frames.push_back(random_frame(rng));

    using clock = std::chrono::steady_clock;
    std::vector<double> latency_ms(frames.size());
    std::vector<double> checksums(frames.size());
    const auto start = clock::now();
    parallel_for(frames.size(), threads, [&](std::size_t i) {
        const auto t0 = clock::now();
        const auto grid = evaluate(model, frames[i]);
        latency_ms[i] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        checksums[i] = grid.values()[grid.size() / 2];
    });
    const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    std::sort(latency_ms.begin(), latency_ms.end());

    char line[160];
    out << "model: " << describe(model) << '\n';
    out << "frames=" << frames.size() << " threads=" << std::max(1, threads) << '\n';
    std::snprintf(line, sizeof line, "elapsed_s=%.6f fps=%.1f\n", elapsed,
                  elapsed > 0.0 ? static_cast<double>(frames.size()) / elapsed : 0.0);
    out << line;
    std::snprintf(line, sizeof line, "latency_ms p50=%.4f p95=%.4f p99=%.4f max=%.4f\n",
                  percentile(latency_ms, 0.50), percentile(latency_ms, 0.95),
                  percentile(latency_ms, 0.99), latency_ms.empty() ? 0.0 : latency_ms.back());
    out << line;
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pitch control surfaces from soccer tracking data", "pitchctl"};
    app.require_subcommand(1);

    SourceOptions src;
    KnnOptions knn;
    KnnOptions knn_b;
    SpearmanOptions sp;
    std::string grid_size = "105x68";
    std::string out_path;
    std::string format = "csv";
    int threads = 1;

    auto* compute = app.add_subcommand("compute", "Write control grids for tracking frames");
    add_source_options(*compute, src, false);
    add_knn_options(*compute, knn);
    add_spearman_options(*compute, sp);
    compute->add_option("--grid", grid_size, "Grid size WxH");
    compute->add_option("--out", out_path, "Output file, or directory for several frames");
    compute->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    compute->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    compute->add_flag("--swap-teams", src.swap_teams, "Swap Home and Away before computing");

    RenderOptions ropts;
    bool no_players = false;
    bool no_ball = false;
    std::string grid_file;
    auto* render = app.add_subcommand("render", "Write PNG heatmaps");
    add_source_options(*render, src, false);
    add_knn_options(*render, knn);
    add_spearman_options(*render, sp);
    render->add_option("--grid", grid_size, "Grid size WxH");
    render->add_option("--grid-file", grid_file, "Render an exported grid file instead of computing");
    render->add_option("--out", out_path, "Output PNG, or directory for several frames");
    render->add_option("--ppc", ropts.output_pixels_per_cell, "Pixels per cell")->check(CLI::PositiveNumber);
    render->add_flag("--no-players", no_players, "Omit player markers");
    render->add_flag("--no-ball", no_ball, "Omit the ball marker");
    render->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    double margin = 0.0;
    std::string diff_out;
    auto* compare = app.add_subcommand("compare", "Compare two models frame by frame");
    add_source_options(*compare, src, true);
    add_knn_options(*compare, knn);
    add_knn_options(*compare, knn_b, "b-");
    add_spearman_options(*compare, sp);
    compare->add_option("--grid", grid_size, "Grid size WxH");
    compare->add_option("--bisector-margin", margin,
                        "Ignore cells whose nearest Home/Away distance gap is within this many meters");
    compare->add_option("--diff-out", diff_out, "Directory for A-B difference grids");
    compare->add_option("--format", format, "Difference grid format")->check(CLI::IsMember({"csv", "json"}));
    compare->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    compare->add_flag("--swap-teams", src.swap_teams, "Swap Home and Away in every frame");

    int bench_frames = 100;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Time the model on synthetic 22-player frames");
    bench->add_option("--frames", bench_frames, "Number of frames")->check(CLI::PositiveNumber);
    add_knn_options(*bench, knn);
    bench->add_option("--grid", grid_size, "Grid size WxH");
    bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "Seed for the synthetic frames");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(src, knn, sp, grid_size, out_path, format, threads, err);
        }
        if (render->parsed()) {
            ropts.draw_players = !no_players;
            ropts.draw_ball = !no_ball;
            return cmd_render(src, knn, sp, grid_size, grid_file, out_path, ropts, threads, err);
        }
        if (compare->parsed()) {
            return cmd_compare(src, knn, knn_b, sp, grid_size, margin, diff_out, format, threads, out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_frames, knn, grid_size, threads, bench_seed, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    }
    return kUsage;
}

}  // namespace pitchctl::cli
