#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace uwbpc {

using nlohmann::json;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

namespace {

[[noreturn]] void fail_at(const std::string& text, std::size_t byte, const std::string& what) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << what;
    throw ParseError(os.str(), line, col);
}

void reject_unknown(const json& obj, const std::string& section,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
                return key == a;
            }) == allowed.end())
            throw ParseError("unknown key \"" + key + "\" in section \"" + section + "\"");
    }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
    }
}

AccessMode parse_mode(const std::string& s) {
    if (s == "cdma") return AccessMode::cdma;
    if (s == "uwb") return AccessMode::uwb;
    throw ParseError("unknown mode \"" + s + "\" (expected \"cdma\" or \"uwb\")");
}

}  // namespace

ScenarioDoc parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
    reject_unknown(doc, "(top level)", {"channel", "rake", "game", "run"});

    ScenarioDoc s;
    const json channel = doc.value("channel", json::object());
    reject_unknown(channel, "channel",
                   {"num_users", "num_paths", "apdp_ratio_db", "distance_min_m",
                    "distance_max_m", "path_gain_scale"});
    s.channel.num_users = get_or(channel, "num_users", 10);
    s.channel.num_paths = get_or(channel, "num_paths", 200);
    s.channel.pdp_ratio = db_to_linear(get_or(channel, "apdp_ratio_db", 20.0));
    s.channel.distance_min = get_or(channel, "distance_min_m", 3.0);
    s.channel.distance_max = get_or(channel, "distance_max_m", 30.0);
    s.channel.path_gain_scale = get_or(channel, "path_gain_scale", 0.3);

    const json rake = doc.value("rake", json::object());
    reject_unknown(rake, "rake", {"finger_fraction", "chips_per_frame", "frames_per_symbol"});
    s.rake.finger_fraction = get_or(rake, "finger_fraction", 1.0);
    s.rake.chips_per_frame = get_or(rake, "chips_per_frame", 50);
    const int frames = get_or(rake, "frames_per_symbol", 5);
    if (frames < 1) throw ParseError("frames_per_symbol must be >= 1");
    s.rake.processing_gain = frames * s.rake.chips_per_frame;

    const json game = doc.value("game", json::object());
    reject_unknown(game, "game",
                   {"total_bits", "info_bits", "rate_bps", "noise_power_w", "max_power_w"});
    s.game.total_bits = get_or(game, "total_bits", 100);
    s.game.info_bits = get_or(game, "info_bits", 100);
    s.game.rate = get_or(game, "rate_bps", 1.0e5);
    s.game.noise_power = get_or(game, "noise_power_w", 5.0e-16);
    s.game.max_power = get_or(game, "max_power_w", 1.0e-6);

    const json run = doc.value("run", json::object());
    reject_unknown(run, "run",
                   {"realizations", "seed", "workers", "processing_gains", "modes",
                    "chips_per_frame", "finger_fractions"});
    s.run.realizations = get_or(run, "realizations", 2000);
    s.run.seed = get_or<std::uint64_t>(run, "seed", 1);
    s.run.workers = get_or(run, "workers", 0);
    s.run.processing_gains =
        get_or(run, "processing_gains", std::vector<int>{256, 512});
    s.run.chips_per_frame = get_or(run, "chips_per_frame", std::vector<int>{10, 50});
    const std::vector<std::string> mode_names =
        get_or(run, "modes", std::vector<std::string>{"cdma", "uwb"});
    for (const auto& name : mode_names) s.run.modes.push_back(parse_mode(name));
    s.run.finger_fractions =
        get_or(run, "finger_fractions", std::vector<double>{0.2, 1.0});

    try {
        s.channel.validate();
        s.rake.validate();
        s.game.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    if (s.run.realizations < 1) throw ParseError("realizations must be >= 1");
    if (s.run.modes.empty()) throw ParseError("modes must not be empty");
    return s;
}

ScenarioDoc load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line, e.column);
    }
}

std::string default_scenario_text() {
    return R"({
  "channel": {
    "num_users": 10,
    "num_paths": 200,
    "apdp_ratio_db": 20.0,
    "distance_min_m": 3.0,
    "distance_max_m": 30.0,
    "path_gain_scale": 0.3
  },
  "rake": {
    "finger_fraction": 1.0,
    "chips_per_frame": 50,
    "frames_per_symbol": 5
  },
  "game": {
    "total_bits": 100,
    "info_bits": 100,
    "rate_bps": 1.0e5,
    "noise_power_w": 5.0e-16,
    "max_power_w": 1.0e-6
  },
  "run": {
    "realizations": 2000,
    "seed": 1,
    "workers": 0,
    "processing_gains": [256, 512],
    "modes": ["cdma", "uwb"],
    "chips_per_frame": [10, 50],
    "finger_fractions": [0.2, 1.0]
  }
}
)";
}

Scenario ScenarioDoc::base_scenario(AccessMode mode) const {
    Scenario s;
    s.channel = channel;
    s.rake = rake;
    s.game = game;
    s.mode = mode;
    if (mode == AccessMode::cdma) s.rake.chips_per_frame = 1;
    s.n_realizations = run.realizations;
    s.master_seed = run.seed;
    return s;
}

std::map<std::string, std::vector<double>> parse_grid(
    const std::string& spec, const std::vector<std::string>& allowed_axes) {
    std::map<std::string, std::vector<double>> axes;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            throw ParseError("grid axis \"" + part + "\" is missing '='");
        const std::string name = part.substr(0, eq);
        const std::string values = part.substr(eq + 1);
        if (std::find(allowed_axes.begin(), allowed_axes.end(), name) == allowed_axes.end())
            throw ParseError("unknown grid axis \"" + name + "\"");
        if (axes.count(name)) throw ParseError("duplicate grid axis \"" + name + "\"");

        std::vector<double> out;
        const auto to_double = [&](const std::string& tok) {
            try {
                std::size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                return v;
            } catch (const std::exception&) {
                throw ParseError("bad number \"" + tok + "\" in grid axis \"" + name + "\"");
            }
        };
        if (values.find(':') != std::string::npos) {
            std::stringstream rs(values);
            std::string a, b, c;
            if (!std::getline(rs, a, ':') || !std::getline(rs, b, ':') ||
                !std::getline(rs, c, ':') || !rs.eof())
                throw ParseError("range for \"" + name + "\" must be start:stop:step");
            const double start = to_double(a), stop = to_double(b), step = to_double(c);
            if (!(step > 0.0) || stop < start)
                throw ParseError("range for \"" + name + "\" must have step > 0, stop >= start");
            const int count = (int)std::floor((stop - start) / step + 0.5) + 1;
            for (int i = 0; i < count; ++i) out.push_back(start + i * step);
        } else {
            std::stringstream vs(values);
            std::string tok;
            while (std::getline(vs, tok, ',')) out.push_back(to_double(tok));
        }
        if (out.empty()) throw ParseError("grid axis \"" + name + "\" has no values");
        axes[name] = out;
    }
    return axes;
}

}  // namespace uwbpc
