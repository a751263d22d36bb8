#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "experiment.hpp"
#include "oracles.hpp"

using namespace elastdort;

TEST_CASE("minimal config gets defaults") {
    auto cfg = parse_config(R"({"cavities": [{"shape": "disk", "center": [5, 0], "scale": 0.002}]})");
    CHECK(cfg.n_directions == 360);
    CHECK(cfg.noise_level == 0.05);
    CHECK(cfg.seed == 0);
    CHECK(cfg.engine == Engine::mie);
    CHECK(cfg.lambda == 1.0);
    CHECK(cfg.mu == 2.0);
    CHECK(cfg.omega == 2.0);
    CHECK(cfg.cavities.size() == 1);
    CHECK(cfg.cavities[0].is_disk());
}

TEST_CASE("semantic errors name the offending field") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"engine": "spectral", "cavities": [{"shape": "disk"}]})"),
        doctest::Contains("engine"), config_error);
    CHECK_THROWS_WITH_AS(parse_config(R"({"engine": "mie"})"), doctest::Contains("cavities"),
                         config_error);
    // mie engine cannot take a non-discal shape
    CHECK_THROWS_AS(
        parse_config(R"({"engine": "mie", "cavities": [{"shape": "peanuthull"}]})"),
        config_error);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_config("{\n  \"engine\": mie\n}");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("column") != std::string::npos);
    }
}

TEST_CASE("peanuthull preset matches the parametric boundary") {
    // x = cx + s (2 + sin 2t) cos t,  y = cy + s (2 + sin 2t) sin t
    double s = 0.002;
    SmoothBoundary bd(peanuthull_shape(), Vec2(5.0, 0.0), s, 64);
    for (int i = 0; i < bd.size(); ++i) {
        double t = 2.0 * M_PI * i / bd.size();
        Vec2 want(5.0 + s * (2.0 + std::sin(2 * t)) * std::cos(t),
                  s * (2.0 + std::sin(2 * t)) * std::sin(t));
        CHECK((bd.node(i) - want).norm() < 1e-15);
    }
}

TEST_CASE("builtin scenes cover the experiments") {
    for (const auto& name : builtin_scene_names()) {
        auto cfg = builtin_scene(name);
        CHECK(!cfg.cavities.empty());
    }
    CHECK(builtin_scene("example3-nine-disks").cavities.size() == 9);
    CHECK(builtin_scene("example4-open-trm").aperture.size() == 2);
    CHECK_THROWS_AS(builtin_scene("example9"), config_error);
}

TEST_CASE("runs are deterministic and reports complete") {
    ExperimentConfig cfg;
    cfg.engine = Engine::mie;
    cfg.cavities = {{disk_shape(), Vec2(2.0, 0.0), 0.01}};
    cfg.n_directions = 60;
    cfg.noise_level = 0.05;
    cfg.seed = 42;
    cfg.imaging = GridSpec{-4.0, 4.0, -2.0, 2.0, 0.25};

    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    cfg.output_dir = "/tmp/elastdort_det_a";
    RunReport a = run_experiment(cfg);
    cfg.output_dir = "/tmp/elastdort_det_b";
    RunReport b = run_experiment(cfg);

    CHECK(slurp(a.eigenvalue_csv) == slurp(b.eigenvalue_csv));
    REQUIRE(!a.image_files.empty());
    CHECK(slurp(a.image_files[0]) == slurp(b.image_files[0]));

    CHECK(int(a.image_files.size()) == a.significant_count);
    for (const auto& f : a.image_files) CHECK(std::filesystem::exists(f));
    CHECK(std::filesystem::exists(a.operator_file));
    CHECK(std::filesystem::exists(a.report_file));

    // different seed changes the noisy spectrum
    cfg.seed = 43;
    cfg.output_dir = "/tmp/elastdort_det_c";
    RunReport c = run_experiment(cfg);
    CHECK(slurp(a.eigenvalue_csv) != slurp(c.eigenvalue_csv));
}

TEST_CASE("eigenvalue csv format") {
    Eigen::VectorXd e(2);
    e << 1.5, 0.25;
    write_eigenvalues_csv(e, "/tmp/elastdort_eig.csv");
    std::ifstream in("/tmp/elastdort_eig.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,value");
    std::getline(in, line);
    CHECK(line.substr(0, 2) == "1,");
    CHECK(line.find('.') != std::string::npos);
}
