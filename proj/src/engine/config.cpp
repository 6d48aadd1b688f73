#include "engine/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace beliefnet {

using nlohmann::json;

void SimConfig::validate() const {
    if (tolerance < 0.0 || tolerance > 1.0) throw ConfigError("h must lie in [0, 1]");
    if (edges_per_input < 1) throw ConfigError("u must be at least 1");
    if (steps_per_cycle < 1) throw ConfigError("e must be at least 1");
    if (n_points < 1) throw ConfigError("n_points must be at least 1");
    if (!fitness.random && fitness.value < 0.0)
        throw ConfigError("fitness must be non-negative");
    if (!sign_counts.random) sign_probs_from_counts(sign_counts.value);
    for (const auto& ov : overrides) {
        if (ov.ordinal >= n_points)
            throw ConfigError("override ordinal " + std::to_string(ov.ordinal) +
                              " out of range (n_points = " + std::to_string(n_points) + ")");
        if (ov.counts && (ov.g || ov.h))
            throw ConfigError("override may give sign counts or explicit g/h, not both");
        if (ov.fitness && *ov.fitness < 0.0)
            throw ConfigError("override fitness must be non-negative");
        if (ov.counts) sign_probs_from_counts(*ov.counts);
        const double g = ov.g.value_or(0.0);
        const double h = ov.h.value_or(0.0);
        if (g < 0.0 || h < 0.0 || g + h > 1.0)
            throw ConfigError("override g/h must be non-negative with g + h <= 1");
        if (ov.time_steps && *ov.time_steps < 1)
            throw ConfigError("override e must be at least 1");
    }
}

std::vector<std::string> SimConfig::warnings() const {
    std::vector<std::string> out;
    if (!fitness.random && fitness.value > 1.0)
        out.push_back("fitness " + std::to_string(fitness.value) +
                      " exceeds the nominal [0, 1] range");
    for (const auto& ov : overrides) {
        if (ov.fitness && *ov.fitness > 1.0)
            out.push_back("override at ordinal " + std::to_string(ov.ordinal) + " sets fitness " +
                          std::to_string(*ov.fitness) + ", above the nominal [0, 1] range");
    }
    return out;
}

const PointOverride* SimConfig::override_for(std::uint64_t ordinal) const {
    for (const auto& ov : overrides)
        if (ov.ordinal == ordinal) return &ov;
    return nullptr;
}

namespace {

[[noreturn]] void bad_key(const std::string& key) {
    throw ConfigError("unknown config key '" + key + "'");
}

double as_number(const json& v, const char* what) {
    if (!v.is_number()) throw ConfigError(std::string(what) + " must be a number");
    return v.get<double>();
}

std::uint64_t as_uint(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ConfigError(std::string(what) + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

FitnessSource parse_fitness(const json& v) {
    FitnessSource src;
    if (v.is_string()) {
        if (v.get<std::string>() != "rnd")
            throw ConfigError("fitness must be a number or \"rnd\"");
        src.random = true;
    } else {
        src.value = as_number(v, "fitness");
    }
    return src;
}

SignCountsSource parse_sign_counts(const json& v) {
    SignCountsSource src;
    if (v.is_string()) {
        if (v.get<std::string>() != "rnd")
            throw ConfigError("sign_counts must be [a, b, c] or \"rnd\"");
        src.random = true;
    } else if (v.is_array() && v.size() == 3) {
        src.value = SignCounts{as_number(v[0], "a"), as_number(v[1], "b"), as_number(v[2], "c")};
    } else {
        throw ConfigError("sign_counts must be [a, b, c] or \"rnd\"");
    }
    return src;
}

PointOverride parse_override(const json& v) {
    if (!v.is_object()) throw ConfigError("overrides entries must be objects");
    PointOverride ov;
    bool have_ordinal = false;
    std::optional<double> a, b, c;
    for (const auto& [key, val] : v.items()) {
        if (key == "ordinal") {
            ov.ordinal = as_uint(val, "ordinal");
            have_ordinal = true;
        } else if (key == "f") {
            ov.fitness = as_number(val, "f");
        } else if (key == "a") {
            a = as_number(val, "a");
        } else if (key == "b") {
            b = as_number(val, "b");
        } else if (key == "c") {
            c = as_number(val, "c");
        } else if (key == "g") {
            ov.g = as_number(val, "g");
        } else if (key == "h") {
            ov.h = as_number(val, "h");
        } else if (key == "e") {
            ov.time_steps = as_uint(val, "e");
        } else {
            bad_key("overrides." + key);
        }
    }
    if (!have_ordinal) throw ConfigError("override is missing 'ordinal'");
    if (a || b || c) {
        if (!(a && b && c))
            throw ConfigError("override sign counts need all of a, b and c");
        ov.counts = SignCounts{*a, *b, *c};
    }
    return ov;
}

SimConfig from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    SimConfig cfg;
    for (const auto& [key, val] : doc.items()) {
        if (key == "h") {
            cfg.tolerance = as_number(val, "h");
        } else if (key == "u") {
            cfg.edges_per_input = static_cast<std::uint32_t>(as_uint(val, "u"));
        } else if (key == "e") {
            cfg.steps_per_cycle = as_uint(val, "e");
        } else if (key == "f_forget") {
            cfg.forget_per_cycle = as_uint(val, "f_forget");
        } else if (key == "n_points") {
            cfg.n_points = as_uint(val, "n_points");
        } else if (key == "fitness") {
            cfg.fitness = parse_fitness(val);
        } else if (key == "sign_counts") {
            cfg.sign_counts = parse_sign_counts(val);
        } else if (key == "overrides") {
            if (!val.is_array()) throw ConfigError("overrides must be an array");
            for (const auto& entry : val) cfg.overrides.push_back(parse_override(entry));
        } else if (key == "seed") {
            cfg.seed = as_uint(val, "seed");
        } else {
            bad_key(key);
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace

SimConfig parse_config_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return from_json(doc);
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

std::string config_to_json(const SimConfig& cfg) {
    json doc;
    doc["h"] = cfg.tolerance;
    doc["u"] = cfg.edges_per_input;
    doc["e"] = cfg.steps_per_cycle;
    doc["f_forget"] = cfg.forget_per_cycle;
    doc["n_points"] = cfg.n_points;
    if (cfg.fitness.random)
        doc["fitness"] = "rnd";
    else
        doc["fitness"] = cfg.fitness.value;
    if (cfg.sign_counts.random)
        doc["sign_counts"] = "rnd";
    else
        doc["sign_counts"] = {cfg.sign_counts.value.a, cfg.sign_counts.value.b,
                              cfg.sign_counts.value.c};
    doc["overrides"] = json::array();
    for (const auto& ov : cfg.overrides) {
        json o;
        o["ordinal"] = ov.ordinal;
        if (ov.fitness) o["f"] = *ov.fitness;
        if (ov.counts) {
            o["a"] = ov.counts->a;
            o["b"] = ov.counts->b;
            o["c"] = ov.counts->c;
        }
        if (ov.g) o["g"] = *ov.g;
        if (ov.h) o["h"] = *ov.h;
        if (ov.time_steps) o["e"] = *ov.time_steps;
        doc["overrides"].push_back(o);
    }
    doc["seed"] = cfg.seed;
    return doc.dump(2);
}

void apply_config_override(SimConfig& cfg, const std::string& key, const std::string& value) {
    auto parse_num = [&](const char* what) {
        try {
            std::size_t used = 0;
            const double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument("trailing content");
            return v;
        } catch (const std::exception&) {
            throw ConfigError(std::string("invalid value for ") + what + ": '" + value + "'");
        }
    };
    auto parse_uint = [&](const char* what) {
        const double v = parse_num(what);
        if (v < 0 || v != static_cast<double>(static_cast<std::uint64_t>(v)))
            throw ConfigError(std::string(what) + " must be a non-negative integer");
        return static_cast<std::uint64_t>(v);
    };

    if (key == "h") {
        cfg.tolerance = parse_num("h");
    } else if (key == "u") {
        cfg.edges_per_input = static_cast<std::uint32_t>(parse_uint("u"));
    } else if (key == "e") {
        cfg.steps_per_cycle = parse_uint("e");
    } else if (key == "f_forget") {
        cfg.forget_per_cycle = parse_uint("f_forget");
    } else if (key == "n_points") {
        cfg.n_points = parse_uint("n_points");
    } else if (key == "seed") {
        cfg.seed = parse_uint("seed");
    } else if (key == "fitness") {
        if (value == "rnd") {
            cfg.fitness = FitnessSource{true, 1.0};
        } else {
            cfg.fitness = FitnessSource{false, parse_num("fitness")};
        }
    } else if (key == "sign_counts") {
        if (value == "rnd") {
            cfg.sign_counts = SignCountsSource{true, {}};
        } else {
            SignCounts counts;
            if (std::sscanf(value.c_str(), "%lf,%lf,%lf", &counts.a, &counts.b, &counts.c) != 3)
                throw ConfigError("sign_counts expects 'a,b,c' or 'rnd', got '" + value + "'");
            cfg.sign_counts = SignCountsSource{false, counts};
        }
    } else {
        bad_key(key);
    }
    cfg.validate();
}

}  // namespace beliefnet
