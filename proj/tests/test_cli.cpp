#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "pitchctl/cli.hpp"
#include "pitchctl/grid.hpp"
#include "pitchctl/synthetic.hpp"
#include "pitchctl/tracking.hpp"
#include "png_decode.hpp"

namespace fs = std::filesystem;
using namespace pitchctl;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("pitchctl_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ControlGrid load_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return import_grid(in, grid_format_for_path(path));
}

/// Canonical-schema play with `frames` random 22-player frames.
std::string write_play(const TempDir& dir, int frames, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Play play;
    play.play_id = "Test play";
    Frame first = random_frame(rng);
    for (int k = 0; k < frames; ++k) {
        Frame f = first;
        f.frame_index = k;
        for (auto& p : f.players) {
            p.x += k * 0.3;
            p.y -= k * 0.1 * (p.team == Team::Home ? 1 : -1);
        }
        f.ball = BallPosition{50.0, 30.0};
        play.frames.push_back(f);
    }
    const auto path = dir / "play.csv";
    std::ofstream out(path);
    write_tracking_csv(out, {derive_velocities(play)});
    return path;
}

std::string stats_lines(const std::string& text) {
    std::string kept;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.starts_with("frame ") || line.starts_with("aggregate")) kept += line + "\n";
    }
    return kept;
}

}  // namespace

TEST_CASE("compute writes grid files") {
    TempDir dir;
    {
        std::ofstream csv(dir / "single.csv");
        csv << "play,frame,player,team,x,y\nsolo,0,1,attack,10,20\n";
    }
    const auto r = run({"compute", "--input", dir / "single.csv", "--frame", "0", "--preset", "voronoi",
                        "--out", dir / "solo.csv"});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    CHECK(r.err.find("knn lags=[0] xi=none tau=none") != std::string::npos);
    const auto g = load_grid(dir / "solo.csv");
    CHECK(g.spec() == GridSpec{});
    for (double v : g.values()) CHECK(v == 1.0);
}

TEST_CASE("explicit parameters override preset fields") {
    TempDir dir;
    const auto input = write_play(dir, 4, 51);
    const std::vector<std::string> common{"compute", "--input", input, "--frame", "3", "--canonical"};
    auto with = [&](std::vector<std::string> extra, const std::string& out) {
        auto args = common;
        args.insert(args.end(), extra.begin(), extra.end());
        args.push_back("--out");
        args.push_back(dir / out);
        const auto r = run(args);
        REQUIRE_MESSAGE(r.code == 0, r.err);
        return slurp(dir / out);
    };
    const auto a = with({"--preset", "spearman_like", "--tau", "1"}, "a.csv");
    const auto b = with({"--lags", "0,10,25"}, "b.csv");
    CHECK(a == b);
    const auto c = with({"--preset", "spearman_like"}, "c.csv");
    CHECK(a != c);
    const auto j = with({"--preset", "fernandez_like", "--format", "json"}, "f.json");
    CHECK(load_grid(dir / "f.json").size() == 105 * 68);
}

TEST_CASE("all frames: one file per frame, independent of thread count") {
    TempDir dir;
    const auto input = write_play(dir, 6, 52);
    for (const char* threads : {"1", "3"}) {
        const auto r = run({"compute", "--input", input, "--canonical", "--all-frames", "--preset",
                            "fernandez_like", "--threads", threads, "--out", dir / ("out" + std::string(threads))});
        REQUIRE_MESSAGE(r.code == 0, r.err);
    }
    for (int k = 0; k < 6; ++k) {
        const auto name = "/Test_play_frame" + std::to_string(k) + ".csv";
        const auto one = slurp(dir / ("out1" + name));
        CHECK_FALSE(one.empty());
        CHECK(one == slurp(dir / ("out3" + name)));
        CHECK(load_grid(dir / ("out1" + name)).size() == 105 * 68);
    }
}

TEST_CASE("exit codes") {
    TempDir dir;
    const auto input = write_play(dir, 2, 53);
    const std::vector<std::string> base{"compute", "--input", input, "--canonical", "--preset", "voronoi",
                                        "--out", dir / "x.csv"};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args).code;
    };
    CHECK(with({"--frame", "1"}) == 0);
    CHECK(with({"--frame", "99"}) == 2);
    CHECK(with({"--frame", "1", "--play", "nope"}) == 2);
    CHECK(with({"--frame", "1", "--bogus"}) == 1);
    CHECK(with({}) == 1);
    CHECK(with({"--frame", "1", "--lags", "0,x"}) == 1);
    CHECK(with({"--frame", "1", "--xi", "-3"}) == 1);
    CHECK(run({"compute", "--input", dir / "missing.csv", "--frame", "0", "--preset", "voronoi", "--out", dir / "y.csv"}).code == 2);
    CHECK(run({"compute", "--input", input, "--frame", "0", "--out", dir / "z.csv"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("compare statistics") {
    SUBCASE("a model against itself") {
        const auto r = run({"compare", "--synthetic", "3", "--preset", "fernandez_like", "--b-preset", "fernandez_like"});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        CHECK(r.out.find("aggregate frames=3 cells=21420 sign_agreement=1 mad=0 max_abs_diff=0") != std::string::npos);
    }
    SUBCASE("Voronoi against the sharp baseline away from bisectors") {
        const auto r = run({"compare", "--synthetic", "10", "--seed", "5", "--preset", "voronoi", "--baseline",
                            "spearman", "--beta", "20", "--bisector-margin", "0.5"});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        std::smatch m;
        REQUIRE(std::regex_search(r.out, m, std::regex("aggregate .* sign_agreement=([0-9.e-]+)")));
        CHECK(std::stod(m[1]) >= 0.995);
        CHECK(r.out.find("model_b: spearman beta=20") != std::string::npos);
    }
    SUBCASE("team-swapped inputs give identical statistics") {
        const std::vector<std::string> args{"compare", "--synthetic", "4", "--preset", "spearman_like",
                                            "--baseline", "spearman"};
        auto swapped = args;
        swapped.push_back("--swap-teams");
        const auto a = run(args);
        const auto b = run(swapped);
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        CHECK(stats_lines(a.out) == stats_lines(b.out));
        CHECK_FALSE(stats_lines(a.out).empty());
    }
    SUBCASE("frame range and difference export") {
        TempDir dir;
        const auto input = write_play(dir, 5, 54);
        const auto r = run({"compare", "--input", input, "--canonical", "--frames", "1-3", "--preset",
                            "voronoi", "--b-preset", "spearman_like", "--diff-out", dir / "diff"});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        CHECK(r.out.find("aggregate frames=3") != std::string::npos);
        CHECK(fs::exists(dir / "diff/Test_play_frame2.csv"));
        CHECK(run({"compare", "--synthetic", "2", "--preset", "voronoi"}).code == 1);
    }
}

TEST_CASE("bench reports throughput and latency") {
    const auto r = run({"bench", "--frames", "1"});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    CHECK(r.out.find("frames=1 ") != std::string::npos);
    CHECK(r.out.find("p50=") != std::string::npos);
    CHECK(r.out.find("p95=") != std::string::npos);
    CHECK(r.out.find("fps=") != std::string::npos);
    CHECK(r.out.find("knn lags=[0,10,25] xi=none tau=6") != std::string::npos);
    CHECK(run({"bench", "--frames", "0"}).code == 1);
    CHECK(run({"bench", "--frames", "4", "--threads", "2", "--preset", "voronoi", "--grid", "50x30"}).code == 0);
}

TEST_CASE("render") {
    TempDir dir;
    {
        std::ofstream g(dir / "zero.csv");
        export_grid(ControlGrid(GridSpec{2, 2, 105.0, 68.0}, 0.0), GridFormat::Csv, g);
        std::ofstream h(dir / "ones.json");
        export_grid(ControlGrid(GridSpec{3, 2, 105.0, 68.0}, 1.0), GridFormat::Json, h);
    }
    auto png = [&](const std::string& name) {
        const auto s = slurp(dir / name);
        return decode_png(std::vector<std::uint8_t>(s.begin(), s.end()));
    };

    REQUIRE(run({"render", "--grid-file", dir / "zero.csv", "--ppc", "1", "--out", dir / "zero.png"}).code == 0);
    const auto zero = png("zero.png");
    REQUIRE(zero.has_value());
    CHECK(zero->width == 2);
    for (auto b : zero->pixels) CHECK(b == 255);

    REQUIRE(run({"render", "--grid-file", dir / "ones.json", "--ppc", "2", "--out", dir / "ones.png"}).code == 0);
    const auto ones = png("ones.png");
    REQUIRE(ones.has_value());
    CHECK(ones->width == 6);
    CHECK(ones->height == 4);
    CHECK(ones->pixel(5, 3) == Rgb{0, 0, 255});

    const auto input = write_play(dir, 3, 55);
    const std::vector<std::string> args{"render", "--input", input, "--canonical", "--frame", "2",
                                        "--preset", "fernandez_like", "--ppc", "2", "--out"};
    auto a = args;
    a.push_back(dir / "a.png");
    auto b = args;
    b.push_back(dir / "b.png");
    REQUIRE(run(a).code == 0);
    REQUIRE(run(b).code == 0);
    CHECK(slurp(dir / "a.png") == slurp(dir / "b.png"));
    CHECK(png("a.png")->width == 210);
    CHECK(run({"render", "--grid-file", dir / "missing.csv", "--out", dir / "m.png"}).code == 2);
}
