#pragma once

#include "medium.hpp"

namespace elastdort {

// Scalar cylindrical wave C_n(kappa r) e^{i n theta} with Cartesian gradient
// and Hessian (C = J_n for regular waves, H_n^{(1)} for outgoing ones).
enum class CylKind { regular, outgoing };

struct ScalarWave {
    cd value;
    Vec2c gradient;
    Mat2c hessian;
};

ScalarWave cylindrical_wave(int n, double kappa, CylKind kind, const Vec2& x);

// Vector modes grad u_n^{kappa_p} and grad-perp u_n^{kappa_s} (or the outgoing
// v_n versions); returns the displacement and its Jacobian for traction data.
struct FieldSampleC {
    Vec2c value;
    Mat2c jacobian;
};

FieldSampleC gradient_mode(const ElasticMedium& m, int n, WaveMode mode, CylKind kind, const Vec2& x);

} // namespace elastdort
