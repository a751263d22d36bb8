#pragma once

// Internal: radial building blocks of the elastodynamic fundamental solution
//   Phi = phi1(r) I + phi2(r) rhat rhat^T,
//   phi1 = (ks^2 g_s + chi'/r)/w^2,   phi2 = (chi'' - chi'/r)/w^2,
// with g_k(r) = (i/4) C0(k r), chi = g_s - g_p, and C_n either the Hankel
// functions H^(1) (radiating kernel) or the Bessel J (its log-coefficient
// under H_n = (2i/pi) ln(r) J_n + entire).
//
// The derivative combinations are reduced through the recurrences
//   C0(z) - 2 C1(z)/z = -C2(z)  and  C2'(z) = (C1(z) - C3(z))/2
// so the Bessel-J branch stays cancellation-free at small z, where the kernel
// splitting needs it most.

#include "bessel.hpp"
#include "medium.hpp"

namespace elastdort::detail {

enum class RadialKind { hankel, besselj };

struct RadialBasis {
    cd c0s;                  // C0(ks r)
    cd c1p, c1s;             // C1
    cd c2p, c2s;             // C2
    cd c3p, c3s;             // C3
};

inline RadialBasis radial_basis(const ElasticMedium& m, double r, RadialKind kind) {
    auto ev = [&](int n, double z) {
        return kind == RadialKind::hankel ? hankel1(n, z).value : bessel_j(n, z).value;
    };
    const double zp = m.kappa_p * r, zs = m.kappa_s * r;
    RadialBasis b;
    b.c0s = ev(0, zs);
    b.c1p = ev(1, zp);
    b.c1s = ev(1, zs);
    b.c2p = ev(2, zp);
    b.c2s = ev(2, zs);
    b.c3p = ev(3, zp);
    b.c3s = ev(3, zs);
    return b;
}

struct RadialPieces {
    cd phi1, phi2;             // Phi coefficients
    cd phi1p, phi2p, phi2_r;   // phi1', phi2', phi2/r
};

inline RadialPieces radial_pieces(const ElasticMedium& m, double r, const RadialBasis& b) {
    const double kp = m.kappa_p, ks = m.kappa_s;
    const cd i4(0.0, 0.25);
    const double w2 = m.omega * m.omega;

    cd gs = i4 * b.c0s;
    cd gsp = -i4 * ks * b.c1s;
    cd chip = i4 * (kp * b.c1p - ks * b.c1s);
    cd d2 = i4 * (ks * ks * b.c2s - kp * kp * b.c2p);               // chi'' - chi'/r
    cd d2p = i4 * 0.5 * (ks * ks * ks * (b.c1s - b.c3s) -
                         kp * kp * kp * (b.c1p - b.c3p));           // its r-derivative

    RadialPieces p;
    p.phi1 = (ks * ks * gs + chip / r) / w2;
    p.phi1p = (ks * ks * gsp + d2 / r) / w2;
    p.phi2 = d2 / w2;
    p.phi2p = d2p / w2;
    p.phi2_r = d2 / (w2 * r);
    return p;
}

// Coefficients of the traction-at-x kernel
//   T_{nu(x)} Phi(x,y) = a (rh.nu) I + b (rh.nu) rh rh^T + c nu rh^T + d rh nu^T
// with rh = (x-y)/r and d = a.
struct TractionCoeffs {
    cd a, b, c;
};

inline TractionCoeffs traction_coeffs(const ElasticMedium& m, double r, RadialKind kind) {
    RadialPieces p = radial_pieces(m, r, radial_basis(m, r, kind));
    TractionCoeffs t;
    t.a = m.mu * (p.phi1p + p.phi2_r);
    t.b = 2.0 * m.mu * p.phi2p - 4.0 * m.mu * p.phi2_r;
    t.c = m.lambda * (p.phi1p + p.phi2p + p.phi2_r) + 2.0 * m.mu * p.phi2_r;
    return t;
}

// Static (Kelvin) counterparts: a0 = d0 = -eta/r, b0 = -4 mu B / r, c0 = eta/r,
// eta = mu/(2 pi (lambda+2mu)), B = (lambda+mu)/(4 pi mu (lambda+2mu)).
inline double kelvin_eta(const ElasticMedium& m) {
    return m.mu / (2.0 * M_PI * (m.lambda + 2.0 * m.mu));
}
inline double kelvin_b(const ElasticMedium& m) {
    return (m.lambda + m.mu) / (4.0 * M_PI * m.mu * (m.lambda + 2.0 * m.mu));
}

} // namespace elastdort::detail
