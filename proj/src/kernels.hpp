#pragma once

#include "medium.hpp"

namespace elastdort {

// Fundamental solution Phi(x,y) of the Navier equation (radiating, 2D).
Mat2c fundamental_solution(const ElasticMedium& m, const Vec2& x, const Vec2& y);

// Kelvin solution Phi_0(x,y) of the static Lame system.
Mat2 static_fundamental_solution(const ElasticMedium& m, const Vec2& x, const Vec2& y);

// Surface traction T_nu u = 2 mu (nu.grad) u + lambda nu (div u) - mu nu_perp (curl u)
// from the Jacobian J_ij = du_i/dx_j at the point.
Vec2c traction(const ElasticMedium& m, const Vec2& normal, const Mat2c& jacobian);

struct FieldSample {
    Vec2c value;
    Mat2c jacobian;
};

FieldSample plane_wave_field(const ElasticMedium& m, const IncidentPlaneWave& wave, const Vec2& x);

// Herglotz wave u^i_f(x) = e^{-i pi/4} int_S [ sqrt(kp/w) e^{i kp a.x} f_p(a) a
//                                            + sqrt(ks/w) e^{i ks a.x} f_s(a) a_perp ] ds_a
Vec2c herglotz_field(const ElasticMedium& m, const HerglotzKernel& f, const Vec2& x);
FieldSample herglotz_field_with_jacobian(const ElasticMedium& m, const HerglotzKernel& f, const Vec2& x);

// Closed forms of the back-propagation kernels
//   E(k,x,y) = int_S a a^T e^{i k a.(x-y)} ds_a = pi Q^T diag(J0-J2, J0+J2) Q
//   H(k,x,y) = 2 pi J0(k|x-y|) I - E(k,x,y)
// with Q the rotation taking x-y to (|x-y|,0); Q = I when x = y.
struct EHKernels {
    Mat2c E;
    Mat2c H;
};
EHKernels eh_kernels(const ElasticMedium& m, const Vec2& x, const Vec2& y);

} // namespace elastdort
