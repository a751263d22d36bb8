#pragma once

#include <vector>

#include "medium.hpp"

namespace elastdort {

struct DiskCavity {
    Vec2 center;
    double radius;

    DiskCavity(const Vec2& c, double R) : center(c), radius(R) {
        if (!(R > 0.0)) throw parameter_error("DiskCavity: radius must be positive");
    }
};

struct ScatteringBlock {
    int order = 0;
    Mat2c matrix;  // maps incoming (a_n, b_n) to outgoing (alpha_n, beta_n)
};

// Mode-matching block S_n = -D^{-1} E of the traction-free disk, with
//   d11 = 2 mu kp^2 H_n''(kp R) - lambda kp^2 H_n(kp R)
//   d12 = -2 mu i n (ks R H_n'(ks R) - H_n(ks R)) / R^2
//   d21 =  2 mu i n (kp R H_n'(kp R) - H_n(kp R)) / R^2
//   d22 = 2 mu ks^2 H_n''(ks R) + mu ks^2 H_n(ks R)
// and E the same with H_n replaced by J_n.
ScatteringBlock scattering_block(const ElasticMedium& m, double R, int n);

// Herglotz kernel Fourier coefficients -> incoming expansion coefficients:
//   a_n = -2 pi i^{n+1} e^{-i pi/4} / sqrt(kp w) f_n^a   (same with ks for b_n)
std::pair<cd, cd> herglotz_to_incoming(const ElasticMedium& m, int n, cd fa, cd fb);

// Far-field block F_n = D^scat_n S_n D^inc_n mapping kernel Fourier
// coefficients to far-field Fourier coefficients.
Mat2c far_block(const ElasticMedium& m, double R, int n);

// Leading-order eigenvalue pair of F_n for small R (|n| >= 2):
//   lambda1 = -8 c_n d_n i n(n+1)(n-1) mu^2 (kp^n + ks^n) / (pi kp^n ks^n) R^{2n-2}
//   lambda2 =  2 c_n d_n i mu^2 n^2 kp^n ks^n / pi R^{2n}
std::pair<cd, cd> small_radius_eigs(const ElasticMedium& m, double R, int n);

// Modal truncation adequate for radius R.
int truncation_order(const ElasticMedium& m, double R);

struct ModalCoefficients {
    int truncation = 0;                 // N; indices n in [-N, N]
    std::vector<std::pair<cd, cd>> incoming;
    std::vector<std::pair<cd, cd>> outgoing;

    std::pair<cd, cd>& in(int n) { return incoming[n + truncation]; }
    std::pair<cd, cd>& out(int n) { return outgoing[n + truncation]; }
    const std::pair<cd, cd>& in(int n) const { return incoming[n + truncation]; }
    const std::pair<cd, cd>& out(int n) const { return outgoing[n + truncation]; }
    // max_n |outgoing(+-N)| / max_n |outgoing| -- truncation adequacy measure
    double tail_ratio() const;
};

// Exact forward solver for a set of discal cavities under independent
// scattering: each disk is solved in its local frame, translation enters
// through phase factors e^{i s.(k_in a - k_out xh)}.
class MieDiskSolver {
  public:
    MieDiskSolver(const ElasticMedium& m, std::vector<DiskCavity> disks);

    // Incoming/outgoing coefficients of one disk for a unit plane wave.
    ModalCoefficients plane_wave_coefficients(int disk, const Vec2& alpha, WaveMode mode) const;

    // Far-field patterns (vp, vs) on the output directions for a unit
    // plane wave from direction alpha; superposed over all disks.
    void far_field(const Vec2& alpha, WaveMode mode, const std::vector<Vec2>& out_dirs,
                   Eigen::VectorXcd& vp, Eigen::VectorXcd& vs) const;

    const ElasticMedium& medium() const { return medium_; }
    const std::vector<DiskCavity>& disks() const { return disks_; }
    int truncation(int disk) const { return trunc_[disk]; }
    const Mat2c& block(int disk, int n) const;

  private:
    ElasticMedium medium_;
    std::vector<DiskCavity> disks_;
    std::vector<int> trunc_;
    std::vector<std::vector<Mat2c>> blocks_;  // blocks_[d][n + N_d]
};

// i^n for any integer n.
cd ipow(int n);

} // namespace elastdort
