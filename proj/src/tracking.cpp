#include "pitchctl/tracking.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "csv.hpp"
#include "pitchctl/error.hpp"
#include "pitchctl/grid.hpp"

namespace pitchctl {

using detail::parse_double;
using detail::read_line;
using detail::split_csv_record;
using detail::trim;

const Frame* Play::find_frame(long frame_index) const {
    for (const auto& f : frames) {
        if (f.frame_index == frame_index) return &f;
    }
    return nullptr;
}

ColumnMapping ColumnMapping::canonical() {
    ColumnMapping m;
    m.unit = CoordinateUnit::Meters;
    m.ball_token = "ball";
    m.home_token = "home";
    m.away_token = "away";
    return m;
}

namespace {

double parse_positive(const std::string& key, const std::string& value) {
    const auto v = parse_double(value);
    if (!v || *v <= 0.0) throw ParameterError("mapping key '" + key + "' needs a positive number");
    return *v;
}

}  // namespace

ColumnMapping load_column_mapping(std::istream& in) {
    ColumnMapping m;
    std::string line;
    int line_no = 0;
    while (read_line(in, line)) {
        ++line_no;
        auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw ParameterError("mapping line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key(trim(text.substr(0, eq)));
        const std::string value(trim(text.substr(eq + 1)));
        if (key == "play_column") m.play_column = value;
        else if (key == "frame_column") m.frame_column = value;
        else if (key == "player_column") m.player_column = value;
        else if (key == "team_column") m.team_column = value;
        else if (key == "x_column") m.x_column = value;
        else if (key == "y_column") m.y_column = value;
        else if (key == "ball_token") m.ball_token = value;
        else if (key == "home_token") m.home_token = value;
        else if (key == "away_token") m.away_token = value;
        else if (key == "frame_rate") m.frame_rate = parse_positive(key, value);
        else if (key == "pitch_length") m.pitch_length = parse_positive(key, value);
        else if (key == "pitch_width") m.pitch_width = parse_positive(key, value);
        else if (key == "unit" || key == "units") {
            if (value == "percent") m.unit = CoordinateUnit::Percent;
            else if (value == "meters") m.unit = CoordinateUnit::Meters;
            else throw ParameterError("mapping unit must be 'percent' or 'meters', got '" + value + "'");
        } else {
            throw ParameterError("unknown mapping key '" + key + "'");
        }
    }
    if (m.home_token == m.away_token) throw ParameterError("home_token and away_token must differ");
    return m;
}

ColumnMapping load_column_mapping_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open mapping file '" + path + "'");
    return load_column_mapping(in);
}

namespace {

struct FrameBuilder {
    Frame frame;
    std::unordered_set<std::string> ids;
    std::size_t first_row = 0;
};

struct PlayBuilder {
    std::string play_id;
    std::map<long, FrameBuilder> frames;
};

std::size_t require_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (trim(header[k]) == name) return k;
    }
    throw SchemaError(name);
}

double parse_coordinate(const std::string& text, const char* axis, std::size_t row) {
    const auto v = parse_double(text);
    if (!v) {
        throw ParseError(row, std::string("non-numeric ") + axis + " coordinate '" + text + "'");
    }
    return *v;
}

}  // namespace

std::vector<Play> parse_tracking(std::istream& in, const ColumnMapping& mapping) {
    std::string line;
    if (!read_line(in, line)) throw SchemaError(mapping.play_column);
    if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const auto header = split_csv_record(line);
    if (!header) throw ParseError(1, "unterminated quote in header");

    const std::size_t c_play = require_column(*header, mapping.play_column);
    const std::size_t c_frame = require_column(*header, mapping.frame_column);
    const std::size_t c_player = require_column(*header, mapping.player_column);
    const std::size_t c_team = require_column(*header, mapping.team_column);
    const std::size_t c_x = require_column(*header, mapping.x_column);
    const std::size_t c_y = require_column(*header, mapping.y_column);
    const std::size_t needed = std::max({c_play, c_frame, c_player, c_team, c_x, c_y}) + 1;

    const bool percent = mapping.unit == CoordinateUnit::Percent;
    auto to_x = [&](double v) { return percent ? v / 100.0 * mapping.pitch_length : v; };
    auto to_y = [&](double v) { return percent ? v / 100.0 * mapping.pitch_width : v; };

    std::vector<PlayBuilder> plays;
    std::unordered_map<std::string, std::size_t> play_index;

    std::size_t row = 1;
    while (read_line(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_record(line);
        if (!fields) throw ParseError(row, "unterminated quote");
        if (fields->size() < needed) {
            throw ParseError(row, "expected at least " + std::to_string(needed) + " fields, got " +
                                      std::to_string(fields->size()));
        }
        const auto& f = *fields;

        const std::string play_id(trim(f[c_play]));
        const auto frame_value = parse_double(f[c_frame]);
        if (!frame_value || *frame_value < 0.0 || std::floor(*frame_value) != *frame_value) {
            throw ParseError(row, "frame must be a non-negative integer, got '" + f[c_frame] + "'");
        }
        const long frame_index = static_cast<long>(*frame_value);

        auto [it, inserted] = play_index.try_emplace(play_id, plays.size());
        if (inserted) plays.push_back(PlayBuilder{play_id, {}});
        auto& fb = plays[it->second].frames[frame_index];
        if (fb.first_row == 0) {
            fb.first_row = row;
            fb.frame.frame_index = frame_index;
        }

        const std::string team(trim(f[c_team]));
        if (team.empty() || team == mapping.ball_token) {
            if (fb.frame.ball) throw DuplicateRowError(row, "second ball row in frame " + std::to_string(frame_index) + " of play '" + play_id + "'");
            // Some providers emit ball rows without a position while it is out of view.
            if (trim(f[c_x]).empty() && trim(f[c_y]).empty()) continue;
            fb.frame.ball = BallPosition{to_x(parse_coordinate(f[c_x], "x", row)),
                                         to_y(parse_coordinate(f[c_y], "y", row))};
            continue;
        }

        PlayerState p;
        if (team == mapping.home_token) p.team = Team::Home;
        else if (team == mapping.away_token) p.team = Team::Away;
        else throw ParseError(row, "unknown team token '" + team + "'");

        p.player_id = std::string(trim(f[c_player]));
        if (p.player_id.empty()) throw ParseError(row, "empty player id");
        p.x = to_x(parse_coordinate(f[c_x], "x", row));
        p.y = to_y(parse_coordinate(f[c_y], "y", row));

        if (!fb.ids.insert(p.player_id).second) {
            throw DuplicateRowError(row, "duplicate row for player '" + p.player_id + "' in frame " +
                                             std::to_string(frame_index) + " of play '" + play_id + "'");
        }
        fb.frame.players.push_back(std::move(p));
    }

    std::vector<Play> out;
    out.reserve(plays.size());
    for (auto& pb : plays) {
        Play play;
        play.play_id = pb.play_id;
        play.frame_rate = mapping.frame_rate;
        play.frames.reserve(pb.frames.size());
        for (auto& [index, fb] : pb.frames) {
            if (fb.frame.players.empty()) {
                throw ParseError(fb.first_row, "frame " + std::to_string(index) + " of play '" +
                                                   pb.play_id + "' has no players");
            }
            play.frames.push_back(std::move(fb.frame));
        }
        out.push_back(derive_velocities(std::move(play)));
    }
    return out;
}

std::vector<Play> parse_tracking_file(const std::string& path, const ColumnMapping& mapping) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open tracking file '" + path + "'");
    return parse_tracking(in, mapping);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    return q + "\"";
}

}  // namespace

void write_tracking_csv(std::ostream& out, const std::vector<Play>& plays) {
    const auto m = ColumnMapping::canonical();
    out << m.play_column << ',' << m.frame_column << ',' << m.player_column << ','
        << m.team_column << ',' << m.x_column << ',' << m.y_column << '\n';
    for (const auto& play : plays) {
        const auto id = csv_field(play.play_id);
        for (const auto& frame : play.frames) {
            for (const auto& p : frame.players) {
                out << id << ',' << frame.frame_index << ',' << csv_field(p.player_id) << ','
                    << (p.team == Team::Home ? m.home_token : m.away_token) << ','
                    << format_double(p.x) << ',' << format_double(p.y) << '\n';
            }
            if (frame.ball) {
                out << id << ',' << frame.frame_index << ",ball," << m.ball_token << ','
                    << format_double(frame.ball->x) << ',' << format_double(frame.ball->y) << '\n';
            }
        }
    }
}

Play derive_velocities(Play play) {
    for (std::size_t k = 0; k < play.frames.size(); ++k) {
        auto& players = play.frames[k].players;
        if (k == 0) {
            for (auto& p : players) p.dx = p.dy = 0.0;
            continue;
        }
        std::unordered_map<std::string_view, const PlayerState*> previous;
        for (const auto& p : play.frames[k - 1].players) previous.emplace(p.player_id, &p);
        for (auto& p : players) {
            const auto it = previous.find(p.player_id);
            if (it == previous.end()) {
                p.dx = p.dy = 0.0;
            } else {
                p.dx = p.x - it->second->x;
                p.dy = p.y - it->second->y;
            }
        }
    }
    return play;
}

Frame swap_teams(Frame frame) {
    for (auto& p : frame.players) p.team = opposite(p.team);
    return frame;
}

const Play* find_play(const std::vector<Play>& plays, const std::string& play_id) {
    for (const auto& p : plays) {
        if (p.play_id == play_id) return &p;
    }
    return nullptr;
}

}  // namespace pitchctl
