#include "medium.hpp"

#include <cmath>

namespace elastdort {

ElasticMedium make_medium(double lambda, double mu, double omega) {
    if (!(mu > 0.0)) throw parameter_error("make_medium: mu must be positive");
    if (!(lambda + mu > 0.0)) throw parameter_error("make_medium: lambda + mu must be positive");
    if (!(omega > 0.0)) throw parameter_error("make_medium: omega must be positive");
    ElasticMedium m;
    m.lambda = lambda;
    m.mu = mu;
    m.omega = omega;
    m.kappa_p = omega / std::sqrt(lambda + 2.0 * mu);
    m.kappa_s = omega / std::sqrt(mu);
    return m;
}

std::vector<Vec2> uniform_directions(int n) {
    if (n <= 0) throw parameter_error("uniform_directions: need n > 0");
    std::vector<Vec2> dirs(n);
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * k / n;
        dirs[k] = Vec2(std::cos(th), std::sin(th));
    }
    return dirs;
}

HerglotzKernel zero_kernel(int n) {
    HerglotzKernel k;
    k.directions = uniform_directions(n);
    k.fp = Eigen::VectorXcd::Zero(n);
    k.fs = Eigen::VectorXcd::Zero(n);
    k.weights = Eigen::VectorXd::Constant(n, 2.0 * M_PI / n);
    return k;
}

} // namespace elastdort
