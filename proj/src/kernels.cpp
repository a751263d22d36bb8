#include "kernels.hpp"

#include <cmath>

#include "radial.hpp"

namespace elastdort {

Mat2c fundamental_solution(const ElasticMedium& m, const Vec2& x, const Vec2& y) {
    Vec2 e = x - y;
    double r = e.norm();
    if (r == 0.0) throw singularity_error("fundamental_solution: x == y");
    Vec2 rh = e / r;
    auto p = detail::radial_pieces(m, r, detail::radial_basis(m, r, detail::RadialKind::hankel));
    Mat2c out = p.phi1 * Mat2c::Identity();
    out += p.phi2 * (rh * rh.transpose()).cast<cd>();
    return out;
}

Mat2 static_fundamental_solution(const ElasticMedium& m, const Vec2& x, const Vec2& y) {
    Vec2 e = y - x;
    double r = e.norm();
    if (r == 0.0) throw singularity_error("static_fundamental_solution: x == y");
    const double la = m.lambda, mu = m.mu;
    double c1 = -(la + 3.0 * mu) / (4.0 * mu * M_PI * (la + 2.0 * mu));
    double c2 = (la + mu) / (4.0 * M_PI * mu * (la + 2.0 * mu));
    return c1 * std::log(r) * Mat2::Identity() + c2 * (e * e.transpose()) / (r * r);
}

Vec2c traction(const ElasticMedium& m, const Vec2& normal, const Mat2c& J) {
    cd div = J(0, 0) + J(1, 1);
    cd curl = J(1, 0) - J(0, 1);
    Vec2c nu = normal.cast<cd>();
    Vec2c nup = perp(normal).cast<cd>();
    return 2.0 * m.mu * (J * nu) + m.lambda * div * nu - m.mu * curl * nup;
}

FieldSample plane_wave_field(const ElasticMedium& m, const IncidentPlaneWave& w, const Vec2& x) {
    double kap = wavenumber(m, w.mode);
    Vec2 pol = (w.mode == WaveMode::compressional) ? w.direction : perp(w.direction);
    cd phase = w.amplitude * std::exp(cd(0.0, kap * w.direction.dot(x)));
    FieldSample s;
    s.value = phase * pol.cast<cd>();
    s.jacobian = cd(0.0, kap) * phase * (pol * w.direction.transpose()).cast<cd>();
    return s;
}

Vec2c herglotz_field(const ElasticMedium& m, const HerglotzKernel& f, const Vec2& x) {
    return herglotz_field_with_jacobian(m, f, x).value;
}

FieldSample herglotz_field_with_jacobian(const ElasticMedium& m, const HerglotzKernel& f, const Vec2& x) {
    if (f.size() == 0) throw parameter_error("herglotz_field: empty kernel grid");
    const cd pref = std::exp(cd(0.0, -M_PI / 4.0));
    const double sp = std::sqrt(m.kappa_p / m.omega);
    const double ss = std::sqrt(m.kappa_s / m.omega);
    Vec2c val = Vec2c::Zero();
    Mat2c jac = Mat2c::Zero();
    for (int k = 0; k < f.size(); ++k) {
        const Vec2& a = f.directions[k];
        Vec2 ap = perp(a);
        cd ep = std::exp(cd(0.0, m.kappa_p * a.dot(x)));
        cd es = std::exp(cd(0.0, m.kappa_s * a.dot(x)));
        cd cp = f.weights[k] * sp * f.fp[k] * ep;
        cd cs = f.weights[k] * ss * f.fs[k] * es;
        val += cp * a.cast<cd>() + cs * ap.cast<cd>();
        jac += cd(0.0, m.kappa_p) * cp * (a * a.transpose()).cast<cd>() +
               cd(0.0, m.kappa_s) * cs * (ap * a.transpose()).cast<cd>();
    }
    return {pref * val, pref * jac};
}

namespace {
Mat2c e_kernel(double kappa, const Vec2& x, const Vec2& y) {
    Vec2 e = x - y;
    double r = e.norm();
    Mat2 Q = Mat2::Identity();
    double z = kappa * r;
    if (r > 0.0) {
        Vec2 rh = e / r;
        Q << rh.x(), rh.y(), -rh.y(), rh.x();
    }
    double j0 = bessel_j(0, z).value.real();
    double j2 = bessel_j(2, z).value.real();
    Mat2 D;
    D << j0 - j2, 0.0, 0.0, j0 + j2;
    return (M_PI * Q.transpose() * D * Q).cast<cd>();
}
} // namespace

EHKernels eh_kernels(const ElasticMedium& m, const Vec2& x, const Vec2& y) {
    EHKernels out;
    out.E = e_kernel(m.kappa_p, x, y);
    double j0s = bessel_j(0, m.kappa_s * (x - y).norm()).value.real();
    out.H = 2.0 * M_PI * j0s * Mat2c::Identity() - e_kernel(m.kappa_s, x, y);
    return out;
}

} // namespace elastdort
