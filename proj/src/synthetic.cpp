#include "pitchctl/synthetic.hpp"

namespace pitchctl {

Frame random_frame(std::mt19937_64& rng, const SyntheticOptions& opts) {
    std::uniform_real_distribution<double> ux(0.0, opts.pitch_length);
    std::uniform_real_distribution<double> uy(0.0, opts.pitch_width);
    std::uniform_real_distribution<double> step(-opts.max_step, opts.max_step);

    Frame frame;
    auto add = [&](Team team, int count, const char* prefix) {
        for (int k = 1; k <= count; ++k) {
            PlayerState p;
            p.player_id = prefix + std::to_string(k);
            p.team = team;
            p.x = ux(rng);
            p.y = uy(rng);
            if (opts.max_step > 0.0) {
                p.dx = step(rng);
                p.dy = step(rng);
            }
            frame.players.push_back(std::move(p));
        }
    };
    add(Team::Home, opts.home_players, "h");
    add(Team::Away, opts.away_players, "a");
    return frame;
}

}  // namespace pitchctl
