#include "cylwave.hpp"

#include <cmath>

#include "bessel.hpp"

namespace elastdort {

ScalarWave cylindrical_wave(int n, double kappa, CylKind kind, const Vec2& x) {
    double r = x.norm();
    if (r == 0.0) throw singularity_error("cylindrical_wave: needs r > 0");
    double th = std::atan2(x.y(), x.x());
    BesselEval C = (kind == CylKind::regular) ? bessel_j(n, kappa * r) : hankel1(n, kappa * r);
    cd ein = std::exp(cd(0.0, n * th));

    cd f = C.value * ein;
    cd fr = kappa * C.first_derivative * ein;
    cd ft = cd(0.0, n) * C.value * ein;
    cd frr = kappa * kappa * C.second_derivative * ein;
    cd frt = cd(0.0, n) * kappa * C.first_derivative * ein;
    cd ftt = -double(n) * n * C.value * ein;

    double c = std::cos(th), s = std::sin(th);
    ScalarWave w;
    w.value = f;
    w.gradient = Vec2c(c * fr - s / r * ft, s * fr + c / r * ft);

    cd mix = frt / r - ft / (r * r);
    cd rad = fr / r + ftt / (r * r);
    w.hessian(0, 0) = c * c * frr + s * s * rad - 2.0 * s * c * mix;
    w.hessian(1, 1) = s * s * frr + c * c * rad + 2.0 * s * c * mix;
    w.hessian(0, 1) = s * c * (frr - rad) + (c * c - s * s) * mix;
    w.hessian(1, 0) = w.hessian(0, 1);
    return w;
}

FieldSampleC gradient_mode(const ElasticMedium& m, int n, WaveMode mode, CylKind kind, const Vec2& x) {
    double kap = wavenumber(m, mode);
    ScalarWave w = cylindrical_wave(n, kap, kind, x);
    FieldSampleC out;
    if (mode == WaveMode::compressional) {
        out.value = w.gradient;
        out.jacobian = w.hessian;
    } else {
        // grad-perp f = (-d2 f, d1 f); Jacobian rows rotate accordingly
        out.value = Vec2c(-w.gradient.y(), w.gradient.x());
        out.jacobian.row(0) = -w.hessian.row(1);
        out.jacobian.row(1) = w.hessian.row(0);
    }
    return out;
}

} // namespace elastdort
