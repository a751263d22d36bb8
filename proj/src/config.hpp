#pragma once

#include <string>

#include "dort.hpp"
#include "imaging.hpp"

namespace elastdort {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    double lambda = 1.0, mu = 2.0, omega = 2.0;
    Engine engine = Engine::mie;
    int n_directions = 360;
    double noise_level = 0.05;
    std::uint64_t seed = 0;
    int boundary_points = 128;
    ApertureArcs aperture;  // empty means full aperture
    GridSpec imaging;
    CavitySet cavities;
    std::string output_dir = "out";
    int max_images = 200;  // cap on emitted per-eigenvector maps

    ElasticMedium medium() const { return make_medium(lambda, mu, omega); }
};

// Parse the JSON configuration (grammar documented in the README). Throws
// config_error with line/column for syntax errors and the offending field
// name for semantic errors.
ExperimentConfig parse_config(const std::string& text);

// Builtin scenes: example1-disk, example1-peanuthull, example2-asym,
// example2-sym, example3-nine-disks, example4-open-trm.
ExperimentConfig builtin_scene(const std::string& name);
std::vector<std::string> builtin_scene_names();

void validate(const ExperimentConfig& cfg);

} // namespace elastdort
