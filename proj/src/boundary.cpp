#include "boundary.hpp"

#include <cmath>

namespace elastdort {

double RadialShape::r(double t) const {
    double v = c0;
    for (size_t k = 0; k < ac.size(); ++k) v += ac[k] * std::cos((k + 1) * t);
    for (size_t k = 0; k < bs.size(); ++k) v += bs[k] * std::sin((k + 1) * t);
    return v;
}

double RadialShape::dr(double t) const {
    double v = 0.0;
    for (size_t k = 0; k < ac.size(); ++k) v -= (k + 1) * ac[k] * std::sin((k + 1) * t);
    for (size_t k = 0; k < bs.size(); ++k) v += (k + 1) * bs[k] * std::cos((k + 1) * t);
    return v;
}

double RadialShape::ddr(double t) const {
    double v = 0.0;
    for (size_t k = 0; k < ac.size(); ++k) {
        double kk = double(k + 1);
        v -= kk * kk * ac[k] * std::cos(kk * t);
    }
    for (size_t k = 0; k < bs.size(); ++k) {
        double kk = double(k + 1);
        v -= kk * kk * bs[k] * std::sin(kk * t);
    }
    return v;
}

RadialShape disk_shape() { return RadialShape{1.0, {}, {}}; }

RadialShape peanuthull_shape() { return RadialShape{2.0, {}, {0.0, 1.0}}; }

SmoothBoundary::SmoothBoundary(const RadialShape& shape, const Vec2& center, double scale,
                               int n_points)
    : shape_(shape), center_(center), scale_(scale), n_(n_points) {
    if (n_ < 8 || (n_ % 2) != 0)
        throw parameter_error("SmoothBoundary: n_points must be even and >= 8");
    if (!(scale > 0.0)) throw parameter_error("SmoothBoundary: scale must be positive");
    x_.resize(n_); dx_.resize(n_); ddx_.resize(n_); nu_.resize(n_); sp_.resize(n_);
    for (int i = 0; i < n_; ++i) {
        double t = param(i);
        double c = std::cos(t), s = std::sin(t);
        double r = scale * shape.r(t), r1 = scale * shape.dr(t), r2 = scale * shape.ddr(t);
        if (!(r > 0.0)) throw parameter_error("SmoothBoundary: radial function must stay positive");
        Vec2 er(c, s), et(-s, c);
        x_[i] = center + r * er;
        dx_[i] = r1 * er + r * et;
        ddx_[i] = (r2 - r) * er + 2.0 * r1 * et;
        sp_[i] = dx_[i].norm();
        nu_[i] = Vec2(dx_[i].y(), -dx_[i].x()) / sp_[i];
    }
}

double SmoothBoundary::curvature(int i) const {
    double cr = dx_[i].x() * ddx_[i].y() - dx_[i].y() * ddx_[i].x();
    return cr / (sp_[i] * sp_[i] * sp_[i]);
}

double SmoothBoundary::signed_area() const {
    double a = 0.0;
    for (int i = 0; i < n_; ++i)
        a += x_[i].x() * dx_[i].y() - x_[i].y() * dx_[i].x();
    return 0.5 * a * (2.0 * M_PI / n_);
}

Vec2 SmoothBoundary::centroid() const {
    Vec2 c = Vec2::Zero();
    double len = 0.0;
    for (int i = 0; i < n_; ++i) {
        c += arc_weight(i) * x_[i];
        len += arc_weight(i);
    }
    return c / len;
}

} // namespace elastdort
