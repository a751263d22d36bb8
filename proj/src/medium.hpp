#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace elastdort {

using cd = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec2c = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};
// Raised when a linear system is numerically singular (e.g. an interior
// traction-free eigenpair); carries the estimated condition number.
struct numerical_singularity_error : std::runtime_error {
    double condition;
    explicit numerical_singularity_error(const std::string& what, double cond)
        : std::runtime_error(what), condition(cond) {}
};

// Counterclockwise rotation by pi/2. Every perp-vector in the project goes
// through this helper so the orientation convention cannot drift.
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }
inline Vec2c perp(const Vec2c& v) { return Vec2c(-v.y(), v.x()); }

struct ElasticMedium {
    double lambda = 0.0;
    double mu = 0.0;
    double omega = 0.0;
    double kappa_p = 0.0;  // omega / sqrt(lambda + 2 mu)
    double kappa_s = 0.0;  // omega / sqrt(mu)
};

ElasticMedium make_medium(double lambda, double mu, double omega);

enum class WaveMode { compressional, shear };

inline double wavenumber(const ElasticMedium& m, WaveMode mode) {
    return mode == WaveMode::compressional ? m.kappa_p : m.kappa_s;
}

struct IncidentPlaneWave {
    Vec2 direction;
    WaveMode mode = WaveMode::compressional;
    cd amplitude{1.0, 0.0};

    IncidentPlaneWave(const Vec2& d, WaveMode md, cd amp = cd(1.0, 0.0))
        : direction(d), mode(md), amplitude(amp) {
        if (std::abs(direction.norm() - 1.0) > 1e-14)
            throw parameter_error("IncidentPlaneWave: direction must be unit length");
    }
};

// Kernel pair (f_p, f_s) sampled on a direction grid with quadrature weights.
struct HerglotzKernel {
    std::vector<Vec2> directions;
    Eigen::VectorXcd fp;
    Eigen::VectorXcd fs;
    Eigen::VectorXd weights;

    int size() const { return static_cast<int>(directions.size()); }
};

// n uniformly spaced directions on the unit circle with equal trapezoid
// weights 2 pi / n; angles theta_k = 2 pi k / n.
HerglotzKernel zero_kernel(int n_directions);
std::vector<Vec2> uniform_directions(int n_directions);

} // namespace elastdort
