#include "config.hpp"

#include <json.hpp>

namespace elastdort {

namespace {

using nlohmann::json;

[[noreturn]] void semantic(const std::string& field, const std::string& why) {
    throw config_error("config field '" + field + "': " + why);
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

Vec2 parse_vec2(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        semantic(field, "expected [x, y]");
    return Vec2(j[0].get<double>(), j[1].get<double>());
}

RadialShape parse_shape(const json& j, const std::string& field) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "disk") return disk_shape();
        if (name == "peanuthull") return peanuthull_shape();
        semantic(field, "unknown shape preset '" + name + "'");
    }
    if (j.is_object()) {
        RadialShape s;
        s.c0 = j.value("c0", 1.0);
        if (j.contains("cos")) s.ac = j.at("cos").get<std::vector<double>>();
        if (j.contains("sin")) s.bs = j.at("sin").get<std::vector<double>>();
        return s;
    }
    semantic(field, "expected preset name or {c0, cos, sin}");
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        throw config_error("config syntax error at line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + e.what());
    }
    ExperimentConfig cfg;
    if (j.contains("medium")) {
        const auto& m = j.at("medium");
        cfg.lambda = m.value("lambda", cfg.lambda);
        cfg.mu = m.value("mu", cfg.mu);
        cfg.omega = m.value("omega", cfg.omega);
    }
    if (j.contains("engine")) {
        std::string e = j.at("engine").get<std::string>();
        if (e == "mie") cfg.engine = Engine::mie;
        else if (e == "bem") cfg.engine = Engine::bem;
        else if (e == "asymptotic") cfg.engine = Engine::asymptotic;
        else semantic("engine", "unknown engine '" + e + "'");
    }
    cfg.n_directions = j.value("directions", cfg.n_directions);
    cfg.noise_level = j.value("noise", cfg.noise_level);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.boundary_points = j.value("boundary_points", cfg.boundary_points);
    cfg.output_dir = j.value("output", cfg.output_dir);
    cfg.max_images = j.value("max_images", cfg.max_images);
    if (j.contains("aperture")) {
        for (const auto& arc : j.at("aperture")) {
            if (!arc.is_array() || arc.size() != 2) semantic("aperture", "expected [[a,b],...]");
            cfg.aperture.emplace_back(arc[0].get<double>(), arc[1].get<double>());
        }
    }
    if (j.contains("imaging")) {
        const auto& g = j.at("imaging");
        cfg.imaging.xmin = g.value("xmin", cfg.imaging.xmin);
        cfg.imaging.xmax = g.value("xmax", cfg.imaging.xmax);
        cfg.imaging.ymin = g.value("ymin", cfg.imaging.ymin);
        cfg.imaging.ymax = g.value("ymax", cfg.imaging.ymax);
        cfg.imaging.resolution = g.value("resolution", cfg.imaging.resolution);
    }
    if (!j.contains("cavities") || !j.at("cavities").is_array() || j.at("cavities").empty())
        semantic("cavities", "at least one cavity is required");
    for (const auto& c : j.at("cavities")) {
        Cavity cav;
        cav.shape = c.contains("shape") ? parse_shape(c.at("shape"), "cavities.shape") : disk_shape();
        cav.center = c.contains("center") ? parse_vec2(c.at("center"), "cavities.center")
                                          : Vec2::Zero();
        cav.scale = c.value("scale", 1.0);
        if (!(cav.scale > 0.0)) semantic("cavities.scale", "must be positive");
        cfg.cavities.push_back(std::move(cav));
    }
    validate(cfg);
    return cfg;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.n_directions < 4 || cfg.n_directions % 2 != 0)
        semantic("directions", "must be even and >= 4");
    if (cfg.noise_level < 0.0) semantic("noise", "must be >= 0");
    if (cfg.boundary_points < 8 || cfg.boundary_points % 2 != 0)
        semantic("boundary_points", "must be even and >= 8");
    if (!(cfg.imaging.resolution > 0.0)) semantic("imaging.resolution", "must be positive");
    if (!(cfg.mu > 0.0)) semantic("medium.mu", "must be positive");
    if (!(cfg.lambda + cfg.mu > 0.0)) semantic("medium.lambda", "lambda + mu must be positive");
    if (!(cfg.omega > 0.0)) semantic("medium.omega", "must be positive");
    if (cfg.engine == Engine::mie)
        for (const auto& c : cfg.cavities)
            if (!c.is_disk()) semantic("engine", "mie engine supports discal cavities only");
    for (auto [a, b] : cfg.aperture)
        if (a == b) semantic("aperture", "empty arc");
}

std::vector<std::string> builtin_scene_names() {
    return {"example1-disk", "example1-peanuthull", "example2-asym",
            "example2-sym", "example3-nine-disks", "example4-open-trm"};
}

ExperimentConfig builtin_scene(const std::string& name) {
    ExperimentConfig cfg;
    cfg.lambda = 1.0; cfg.mu = 2.0; cfg.omega = 2.0;
    cfg.output_dir = "out/" + name;
    if (name == "example1-disk") {
        cfg.engine = Engine::mie;
        cfg.cavities = {{disk_shape(), Vec2(5.0, 0.0), 0.002}};
        return cfg;
    }
    if (name == "example1-peanuthull") {
        cfg.engine = Engine::bem;
        // profile 2 + sin(2t) normalized to maximal radius 0.002
        cfg.cavities = {{peanuthull_shape(), Vec2(5.0, 0.0), 0.002 / 3.0}};
        return cfg;
    }
    if (name == "example2-asym") {
        cfg.engine = Engine::mie;
        cfg.cavities = {{disk_shape(), Vec2(5.0, 0.0), 0.002},
                        {disk_shape(), Vec2(-5.0, 0.0), 0.004}};
        return cfg;
    }
    if (name == "example2-sym") {
        cfg.engine = Engine::mie;
        cfg.cavities = {{disk_shape(), Vec2(5.0, 0.0), 0.002},
                        {disk_shape(), Vec2(-5.0, 0.0), 0.002}};
        return cfg;
    }
    if (name == "example3-nine-disks") {
        cfg.engine = Engine::mie;
        cfg.imaging = GridSpec{-16.0, 16.0, -16.0, 16.0, 0.1};
        const double xs[3] = {-12.0, 0.0, 12.0};
        const double ys[3] = {12.0, 0.0, -12.0};
        int k = 0;
        for (double y : ys)
            for (double x : xs) cfg.cavities.push_back({disk_shape(), Vec2(x, y), 0.01 * (++k)});
        return cfg;
    }
    if (name == "example4-open-trm") {
        cfg = builtin_scene("example2-asym");
        cfg.output_dir = "out/example4-open-trm";
        cfg.aperture = {{M_PI / 4.0, 3.0 * M_PI / 4.0}, {5.0 * M_PI / 4.0, 7.0 * M_PI / 4.0}};
        return cfg;
    }
    throw config_error("unknown builtin scene '" + name + "'");
}

} // namespace elastdort
