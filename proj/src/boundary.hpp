#pragma once

#include <string>
#include <vector>

#include "medium.hpp"

namespace elastdort {

// Starlike shape r(t) = c0 + sum_k [ac_k cos(kt) + bs_k sin(kt)] at unit scale.
struct RadialShape {
    double c0 = 1.0;
    std::vector<double> ac;  // ac[k-1] multiplies cos(kt)
    std::vector<double> bs;  // bs[k-1] multiplies sin(kt)

    double r(double t) const;
    double dr(double t) const;
    double ddr(double t) const;
};

RadialShape disk_shape();
// Radial profile 2 + sin(2t); at scale s the boundary is
// x = center + s (2 + sin 2t) (cos t, sin t).
RadialShape peanuthull_shape();

// Closed C^2 curve sampled at n_points parameter-equispaced nodes, with exact
// first/second derivatives of the parameterization.
class SmoothBoundary {
  public:
    SmoothBoundary(const RadialShape& shape, const Vec2& center, double scale, int n_points);

    int size() const { return n_; }
    double param(int i) const { return 2.0 * M_PI * i / n_; }
    const Vec2& node(int i) const { return x_[i]; }
    const Vec2& d1(int i) const { return dx_[i]; }
    const Vec2& d2(int i) const { return ddx_[i]; }
    double speed(int i) const { return sp_[i]; }         // |x'(t_i)|
    const Vec2& normal(int i) const { return nu_[i]; }   // outward unit normal
    Vec2 tangent(int i) const { return dx_[i] / sp_[i]; }
    double curvature(int i) const;                       // cross(x',x'')/|x'|^3
    double arc_weight(int i) const { return 2.0 * M_PI / n_ * sp_[i]; }

    double signed_area() const;
    Vec2 centroid() const;
    const RadialShape& shape() const { return shape_; }
    const Vec2& center() const { return center_; }
    double scale() const { return scale_; }

  private:
    RadialShape shape_;
    Vec2 center_;
    double scale_;
    int n_;
    std::vector<Vec2> x_, dx_, ddx_, nu_;
    std::vector<double> sp_;
};

} // namespace elastdort
