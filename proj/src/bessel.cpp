#include "bessel.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>

namespace elastdort {

namespace {

double j_raw(int n, double z) {
    int m = std::abs(n);
    double v = boost::math::cyl_bessel_j(m, z);
    return (n < 0 && (m & 1)) ? -v : v;
}

double y_raw(int n, double z) {
    int m = std::abs(n);
    double v = boost::math::cyl_neumann(m, z);
    return (n < 0 && (m & 1)) ? -v : v;
}

// Second derivative at z=0 of J_n from the ascending series.
double j_second_at_origin(int n) {
    switch (std::abs(n)) {
        case 0: return -0.5;
        case 2: return 0.25;
        default: return 0.0;
    }
}

} // namespace

BesselEval bessel_j(int n, double z) {
    if (!std::isfinite(z) || z < 0.0)
        throw std::domain_error("bessel_j: argument must be finite and nonnegative");
    BesselEval out;
    out.order = n;
    out.argument = z;
    if (z == 0.0) {
        int m = std::abs(n);
        out.value = (m == 0) ? 1.0 : 0.0;
        double d1 = (m == 1) ? 0.5 : 0.0;
        if (n == -1) d1 = -d1;
        out.first_derivative = d1;
        out.second_derivative = j_second_at_origin(n) * ((n < 0 && (std::abs(n) & 1)) ? -1.0 : 1.0);
        return out;
    }
    double v = j_raw(n, z);
    double d1 = 0.5 * (j_raw(n - 1, z) - j_raw(n + 1, z));
    out.value = v;
    out.first_derivative = d1;
    out.second_derivative = ((double(n) * n - z * z) * v - z * d1) / (z * z);
    return out;
}

BesselEval hankel1(int n, double z) {
    if (!std::isfinite(z) || z <= 0.0)
        throw std::domain_error("hankel1: argument must be finite and positive");
    BesselEval out;
    out.order = n;
    out.argument = z;
    auto h = [&](int m) { return cd(j_raw(m, z), y_raw(m, z)); };
    cd v = h(n);
    cd d1 = 0.5 * (h(n - 1) - h(n + 1));
    out.value = v;
    out.first_derivative = d1;
    out.second_derivative = ((double(n) * n - z * z) * v - z * d1) / (z * z);
    return out;
}

cd small_z_series(int n, double z, SeriesKind kind) {
    if (n < 0) throw std::domain_error("small_z_series: order must be nonnegative");
    if (kind == SeriesKind::J) {
        if (z == 0.0) return n == 0 ? 1.0 : 0.0;
        double g = std::tgamma(double(n) + 1.0);
        return (std::pow(z, n) - std::pow(z, n + 2) / (4.0 * n + 4.0)) /
               (std::pow(2.0, n) * g);
    }
    if (n < 2)
        throw std::domain_error("small_z_series: H1 truncation needs n >= 2");
    if (z <= 0.0) throw std::domain_error("small_z_series: H1 needs z > 0");
    double g = std::tgamma(double(n));
    double bracket = std::pow(z, -n) + std::pow(z, -(n - 2)) / (4.0 * n - 4.0);
    return cd(0.0, -1.0) * std::pow(2.0, n) * g / M_PI * bracket;
}

} // namespace elastdort
