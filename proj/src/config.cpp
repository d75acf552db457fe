#include "magnon/config.hpp"

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace magnon {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& section, const std::string& name,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : section.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ParseError("unknown key '" + name + "." + key + "'");
    }
}

double get_number(const json& section, const char* key, double fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_number()) throw ParseError(std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

int get_int(const json& section, const char* key, int fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

std::string get_string(const json& section, const char* key, const std::string& fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

DeviceConfig device_config_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("configuration root must be a JSON object");
    reject_unknown_keys(j, "", {"film", "transducer", "device", "solver"});

    DeviceConfig cfg;
    const json empty = json::object();

    const json& film = j.contains("film") ? j.at("film") : empty;
    reject_unknown_keys(film, "film",
                        {"b_sat", "gamma", "exch", "thickness", "length", "width", "q_loaded"});
    cfg.film.b_sat = get_number(film, "b_sat", cfg.film.b_sat);
    cfg.film.gamma = get_number(film, "gamma", cfg.film.gamma);
    cfg.film.exch = get_number(film, "exch", cfg.film.exch);
    cfg.film.thickness = get_number(film, "thickness", cfg.film.thickness);
    cfg.film.length = get_number(film, "length", cfg.film.length);
    cfg.film.width = get_number(film, "width", cfg.film.width);
    cfg.film.q_loaded = get_number(film, "q_loaded", cfg.film.q_loaded);

    const json& td = j.contains("transducer") ? j.at("transducer") : empty;
    reject_unknown_keys(td, "transducer", {"shape", "base_width", "hc_x", "hc_y", "gap0",
                                           "tilt_deg", "extended_asymmetry"});
    cfg.transducer.shape = shape_from_string(get_string(td, "shape", to_string(cfg.transducer.shape)));
    cfg.transducer.base_width = get_number(td, "base_width", cfg.transducer.base_width);
    cfg.transducer.hc_x = get_number(td, "hc_x", cfg.transducer.hc_x);
    cfg.transducer.hc_y = get_number(td, "hc_y", cfg.transducer.hc_y);
    cfg.transducer.gap0 = get_number(td, "gap0", cfg.transducer.gap0);
    cfg.transducer.tilt_deg = get_number(td, "tilt_deg", cfg.transducer.tilt_deg);
    cfg.transducer.extended_asymmetry =
        get_number(td, "extended_asymmetry", cfg.transducer.extended_asymmetry);

    const json& dev = j.contains("device") ? j.at("device") : empty;
    reject_unknown_keys(dev, "device",
                        {"cavities", "port_impedance", "electrode_r", "electrode_l"});
    cfg.cavities = get_int(dev, "cavities", cfg.cavities);
    cfg.port_impedance = get_number(dev, "port_impedance", cfg.port_impedance);
    cfg.electrode_r = get_number(dev, "electrode_r", cfg.electrode_r);
    cfg.electrode_l = get_number(dev, "electrode_l", cfg.electrode_l);

    const json& solver = j.contains("solver") ? j.at("solver") : empty;
    reject_unknown_keys(solver, "solver", {"engine", "n_max", "m_max"});
    cfg.solver.engine = engine_from_string(get_string(solver, "engine", to_string(cfg.solver.engine)));
    cfg.solver.n_max = get_int(solver, "n_max", cfg.solver.n_max);
    cfg.solver.m_max = get_int(solver, "m_max", cfg.solver.m_max);

    cfg.validate();
    return cfg;
}

DeviceConfig parse_device_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config parse failure: ") + e.what());
    }
    return device_config_from_json(j);
}

nlohmann::json device_config_to_json(const DeviceConfig& cfg) {
    return json{
        {"film",
         {{"b_sat", cfg.film.b_sat},
          {"gamma", cfg.film.gamma},
          {"exch", cfg.film.exch},
          {"thickness", cfg.film.thickness},
          {"length", cfg.film.length},
          {"width", cfg.film.width},
          {"q_loaded", cfg.film.q_loaded}}},
        {"transducer",
         {{"shape", to_string(cfg.transducer.shape)},
          {"base_width", cfg.transducer.base_width},
          {"hc_x", cfg.transducer.hc_x},
          {"hc_y", cfg.transducer.hc_y},
          {"gap0", cfg.transducer.gap0},
          {"tilt_deg", cfg.transducer.tilt_deg},
          {"extended_asymmetry", cfg.transducer.extended_asymmetry}}},
        {"device",
         {{"cavities", cfg.cavities},
          {"port_impedance", cfg.port_impedance},
          {"electrode_r", cfg.electrode_r},
          {"electrode_l", cfg.electrode_l}}},
        {"solver",
         {{"engine", to_string(cfg.solver.engine)},
          {"n_max", cfg.solver.n_max},
          {"m_max", cfg.solver.m_max}}}};
}

std::string config_digest(const DeviceConfig& cfg) {
    const std::string canon = device_config_to_json(cfg).dump();
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : canon) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

}  // namespace magnon
