#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pitchctl {

enum class Team { Home, Away };

inline Team opposite(Team t) { return t == Team::Home ? Team::Away : Team::Home; }
inline double team_sign(Team t) { return t == Team::Home ? 1.0 : -1.0; }

/// One player's state at one frame. Positions are pitch meters, velocities
/// are meters per frame.
struct PlayerState {
    std::string player_id;
    Team team = Team::Home;
    double x = 0.0;
    double y = 0.0;
    double dx = 0.0;
    double dy = 0.0;
};

struct BallPosition {
    double x = 0.0;
    double y = 0.0;
};

struct Frame {
    long frame_index = 0;
    std::vector<PlayerState> players;
    std::optional<BallPosition> ball;
};

struct Play {
    std::string play_id;
    std::vector<Frame> frames;
    double frame_rate = 20.0;

    const Frame* find_frame(long frame_index) const;
};

enum class CoordinateUnit { Percent, Meters };

/// Maps provider-specific CSV columns and tokens onto the tracking model.
/// The defaults describe the Last Row files: percent coordinates, team
/// tokens "attack"/"defense", ball rows carrying an empty team field.
struct ColumnMapping {
    std::string play_column = "play";
    std::string frame_column = "frame";
    std::string player_column = "player";
    std::string team_column = "team";
    std::string x_column = "x";
    std::string y_column = "y";
    CoordinateUnit unit = CoordinateUnit::Percent;
    std::string ball_token = "ball";
    std::string home_token = "attack";
    std::string away_token = "defense";
    double frame_rate = 20.0;
    double pitch_length = 105.0;
    double pitch_width = 68.0;

    /// Schema written by write_tracking_csv: meters, "home"/"away"/"ball".
    static ColumnMapping canonical();
};

/// Reads `key=value` lines ('#' starts a comment). Unknown keys and bad
/// values raise ParameterError.
ColumnMapping load_column_mapping(std::istream& in);
ColumnMapping load_column_mapping_file(const std::string& path);

/// Parses a tracking CSV into plays (in order of first appearance) with
/// frames sorted by index and velocities derived.
std::vector<Play> parse_tracking(std::istream& in, const ColumnMapping& mapping = {});
std::vector<Play> parse_tracking_file(const std::string& path, const ColumnMapping& mapping = {});

/// Writes plays in the canonical schema (meters, 17 significant digits).
void write_tracking_csv(std::ostream& out, const std::vector<Play>& plays);

/// dx/dy become the displacement from the same player's position in the
/// preceding frame, or zero when the player is absent there.
Play derive_velocities(Play play);

/// Copy of the frame with every player's team flipped.
Frame swap_teams(Frame frame);

const Play* find_play(const std::vector<Play>& plays, const std::string& play_id);

}  // namespace pitchctl
