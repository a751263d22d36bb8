// Command-line front end: forward simulation, DORT inversion, builtin scene
// replay and theory verification.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "experiment.hpp"

using namespace elastdort;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Overrides {
    std::string out, engine, aperture;
    int directions = -1;
    double noise = -1.0;
    long long seed = -1;
};

void apply_overrides(ExperimentConfig& cfg, const Overrides& ov) {
    if (!ov.out.empty()) cfg.output_dir = ov.out;
    if (ov.directions > 0) cfg.n_directions = ov.directions;
    if (ov.noise >= 0.0) cfg.noise_level = ov.noise;
    if (ov.seed >= 0) cfg.seed = std::uint64_t(ov.seed);
    if (!ov.engine.empty()) {
        if (ov.engine == "mie") cfg.engine = Engine::mie;
        else if (ov.engine == "bem") cfg.engine = Engine::bem;
        else if (ov.engine == "asymptotic") cfg.engine = Engine::asymptotic;
        else throw config_error("unknown engine '" + ov.engine + "'");
    }
    if (!ov.aperture.empty()) {
        // "a,b[;c,d]..." in radians
        cfg.aperture.clear();
        std::stringstream ss(ov.aperture);
        std::string arc;
        while (std::getline(ss, arc, ';')) {
            auto comma = arc.find(',');
            if (comma == std::string::npos) throw config_error("bad --aperture syntax");
            cfg.aperture.emplace_back(std::stod(arc.substr(0, comma)),
                                      std::stod(arc.substr(comma + 1)));
        }
    }
    validate(cfg);
}

void print_report(const RunReport& rep) {
    std::cout << "output: " << rep.output_dir << "\n";
    std::cout << "significant eigenvalues: " << rep.significant_count
              << " (gap ratio " << rep.gap_ratio << ")\n";
    int n = std::min<int>(8, int(rep.reported_eigenvalues.size()));
    std::cout << "top eigenvalues (reported scale):";
    for (int i = 0; i < n; ++i) std::cout << ' ' << rep.reported_eigenvalues[i];
    std::cout << "\nnormality residual " << rep.normality << ", reciprocity residual "
              << rep.reciprocity << "\n";
    if (rep.aperture_applied) std::cout << "aperture: limited (open TRM mode)\n";
    std::cout << "images: " << rep.image_files.size() << ", elapsed " << rep.seconds << " s\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D elastic cavity scattering and time-reversal (DORT) imaging"};
    app.require_subcommand(1);

    std::string config_path, scene_name;
    Overrides ov;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config)
            cmd->add_option("--config", config_path, "JSON config file")->required();
        cmd->add_option("--out", ov.out, "output directory");
        cmd->add_option("--seed", ov.seed, "noise RNG seed");
        cmd->add_option("--noise", ov.noise, "relative noise level");
        cmd->add_option("--directions", ov.directions, "direction grid size");
        cmd->add_option("--engine", ov.engine, "mie | bem | asymptotic");
        cmd->add_option("--aperture", ov.aperture, "arcs a,b[;c,d]... in radians");
    };

    auto* sim = app.add_subcommand("simulate", "assemble the far-field operator only");
    add_common(sim, true);
    auto* inv = app.add_subcommand("invert", "full pipeline: operator, spectrum, imaging");
    add_common(inv, true);
    auto* rep = app.add_subcommand("replay", "run a builtin experiment scene");
    rep->add_option("scene", scene_name, "scene name")->required();
    add_common(rep, false);
    auto* ver = app.add_subcommand("verify", "run theory property checks");
    add_common(ver, false);
    ver->remove_option(ver->get_option("--aperture"));

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg;
        if (app.got_subcommand(rep)) {
            cfg = builtin_scene(scene_name);
        } else if (app.got_subcommand(ver)) {
            cfg = builtin_scene("example1-disk");
        } else {
            cfg = parse_config(read_file(config_path));
        }
        apply_overrides(cfg, ov);

        if (app.got_subcommand(sim)) {
            RunReport r = run_simulation(cfg);
            std::cout << "operator written to " << r.operator_file << " (normality "
                      << r.normality << ", reciprocity " << r.reciprocity << ")\n";
        } else if (app.got_subcommand(ver)) {
            auto entries = verify_theory(cfg);
            int fails = 0;
            for (const auto& e : entries) {
                std::cout << (e.pass ? "[pass] " : "[FAIL] ") << e.name << ": measured "
                          << e.measured << "  (expected " << e.expectation << ")\n";
                if (!e.pass) ++fails;
            }
            std::cout << entries.size() - fails << "/" << entries.size() << " checks passed\n";
        } else {
            print_report(run_experiment(cfg));
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const parameter_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_singularity_error& e) {
        std::cerr << "numerical failure: " << e.what() << " (condition " << e.condition << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
