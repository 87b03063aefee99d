#include "orthospec/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orthospec {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error_with_line(const std::string& text,
                                        const nlohmann::json::parse_error& err) {
    std::size_t offset = err.byte > 0 ? err.byte - 1 : 0;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ConfigError("config:" + std::to_string(line) + ":" + std::to_string(col) +
                      ": " + err.what());
}

template <class T>
std::optional<T> opt(const json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field '") + key + "': " + e.what());
    }
}

template <class T>
std::vector<T> vec(const json& j, const char* key) {
    if (!j.contains(key)) return {};
    try {
        return j.at(key).get<std::vector<T>>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field '") + key + "': " + e.what());
    }
}

}  // namespace

GroupConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        parse_error_with_line(json_text, e);
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");

    GroupConfig cfg;
    cfg.builtin = opt<std::string>(j, "builtin");
    if (j.contains("generators")) {
        try {
            for (const auto& row : j.at("generators")) {
                auto v = row.get<std::vector<double>>();
                if (v.size() != 4)
                    throw ConfigError("config field 'generators': each entry needs 4 numbers");
                cfg.generators.push_back({v[0], v[1], v[2], v[3]});
            }
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config field 'generators': ") + e.what());
        }
    }
    if (cfg.builtin && !cfg.generators.empty())
        throw ConfigError("config: exactly one of 'builtin'/'generators' may be present");

    if (j.contains("geodesic")) {
        cfg.geodesic_word = vec<int>(j.at("geodesic"), "word");
        if (cfg.geodesic_word.empty())
            throw ConfigError("config field 'geodesic.word': empty word");
    }
    if (j.contains("geodesic2")) {
        cfg.geodesic2_word = vec<int>(j.at("geodesic2"), "word");
        if (cfg.geodesic2_word.empty())
            throw ConfigError("config field 'geodesic2.word': empty word");
    }
    if (j.contains("characters")) {
        const auto& c = j.at("characters");
        CharacterPair jk;
        jk.j = opt<int>(c, "j").value_or(0);
        jk.k = opt<int>(c, "k").value_or(0);
        cfg.characters = jk;
    }

    if (j.contains("params")) {
        const auto& p = j.at("params");
        if (!p.is_object()) throw ConfigError("config field 'params' must be an object");
        cfg.t = opt<double>(p, "t");
        cfg.t_ladder = vec<double>(p, "t_ladder");
        cfg.z_ladder = vec<double>(p, "z_ladder");
        cfg.x_ladder = vec<double>(p, "x_ladder");
        cfg.cutoff_x = opt<double>(p, "cutoff_X");
        cfg.tolerance = opt<double>(p, "tolerance").value_or(0.0);
        cfg.budget = opt<std::size_t>(p, "budget").value_or(cfg.budget);
        cfg.threads = opt<int>(p, "threads").value_or(0);
        if (cfg.threads < 0) throw ConfigError("config field 'params.threads': must be >= 0");
        cfg.vol_x = opt<double>(p, "volX");
        cfg.len_c = opt<double>(p, "lenC");
        cfg.lambda_max = opt<double>(p, "lambda_max");
        cfg.r = opt<double>(p, "r");
        cfg.z = opt<double>(p, "z");
        cfg.m = opt<int>(p, "m");
        cfg.n = opt<int>(p, "n");
        cfg.x = opt<double>(p, "x");
        cfg.spectral_csv = opt<std::string>(p, "spectral_csv");
    }

    cfg.echo = j.dump();  // nlohmann orders keys, so the echo is canonical
    return cfg;
}

FuchsianGroup load_group(const GroupConfig& config) {
    if (config.builtin) {
        if (*config.builtin == "bolza") return builtin_bolza();
        throw ConfigError("unknown builtin group '" + *config.builtin + "'");
    }
    if (config.generators.empty())
        throw EmptyGenerators("config names no builtin and no generators");
    return make_group(config.generators, "config");
}

EnumerationParams enumeration_params(const GroupConfig& config) {
    EnumerationParams params;
    params.budget = config.budget;
    params.threads = config.threads;
    return params;
}

std::vector<SpectralDatum> read_spectral_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spectral CSV '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    // Leading '#' lines (e.g. the envelope emitted by `orthospec synthetic`)
    // are treated as comments.
    do {
        if (!std::getline(in, line))
            throw ConfigError("spectral CSV '" + path + "' is empty");
        ++lineno;
    } while (!line.empty() && line[0] == '#');
    if (line.rfind("lambda,p", 0) != 0)
        throw ConfigError("spectral CSV must start with header 'lambda,p'");
    std::vector<SpectralDatum> data;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b))
            throw ConfigError("spectral CSV line " + std::to_string(lineno) + ": need 'lambda,p'");
        try {
            data.push_back({std::stod(a), std::stod(b)});
        } catch (const std::exception&) {
            throw ConfigError("spectral CSV line " + std::to_string(lineno) + ": bad number");
        }
    }
    return data;
}

}  // namespace orthospec
