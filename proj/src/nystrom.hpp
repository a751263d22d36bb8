#pragma once

#include <vector>

#include <Eigen/Dense>

#include "boundary.hpp"
#include "medium.hpp"

namespace elastdort {

using BoundaryDensity = std::vector<Vec2c>;

// Martensen-Kussmaul weights R_j(t_i) for int_0^{2pi} ln(4 sin^2((t-s)/2)) f(s) ds
// on n equispaced nodes (n even).
Eigen::MatrixXd kress_log_weights(int n);

// Spectral quadrature for pv int_0^{2pi} cot((s - t_i)/2) f(s) ds: weight
// 2h cot((t_j - t_i)/2) on nodes with odd offset j-i, zero otherwise.
Eigen::MatrixXd hilbert_cot_weights(int n);

// Nystrom matrix of the traction operator K' (adjoint double layer, factor-2
// convention) for the radiating kernel; 2N x 2N with per-node 2x2 blocks.
Eigen::MatrixXcd nystrom_kprime(const ElasticMedium& m, const SmoothBoundary& bd);

// Static (Kelvin) counterpart used by the polarization tensor.
Eigen::MatrixXd nystrom_kprime_static(const ElasticMedium& m, const SmoothBoundary& bd);

// Factored boundary system (I - K') phi = 2 g with condition monitoring.
class NystromSolver {
  public:
    NystromSolver(const ElasticMedium& m, const SmoothBoundary& bd);

    // Density solving (I - K') phi = 2 * incident_traction.
    BoundaryDensity solve(const std::vector<Vec2c>& incident_traction) const;
    // Convenience: traction data of a unit plane wave on the boundary.
    std::vector<Vec2c> plane_wave_traction(const Vec2& alpha, WaveMode mode) const;

    double condition_estimate() const { return cond_; }
    const SmoothBoundary& boundary() const { return bd_; }
    const ElasticMedium& medium() const { return medium_; }

  private:
    ElasticMedium medium_;
    SmoothBoundary bd_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    double cond_;
};

// Far-field pair (vp, vs) of the single-layer field with the given density:
//   vp(xh) = gamma kp^{3/2} xh  . int e^{-i kp xh.y} phi(y) ds_y
//   vs(xh) = gamma ks^{3/2} xh+ . int e^{-i ks xh.y} phi(y) ds_y
// gamma = e^{i pi/4} / (sqrt(8 pi) w^2).
void far_field(const ElasticMedium& m, const SmoothBoundary& bd, const BoundaryDensity& phi,
               const std::vector<Vec2>& dirs, Eigen::VectorXcd& vp, Eigen::VectorXcd& vs);

// Polarization tensor P = -int_{dSigma} xi (x) [(I - K0')^{-1} nu](xi) ds_xi
// of the unit-scale boundary.
Mat2 polarization_tensor(const ElasticMedium& m, const SmoothBoundary& bd);

// Coupled multi-body solve of the full pair system (off-diagonal interaction
// blocks are smooth and integrated by the plain trapezoid rule). Used to
// measure the multiple-scattering defect of independent superposition.
std::vector<BoundaryDensity> solve_density_coupled(
    const ElasticMedium& m, const std::vector<SmoothBoundary>& bds,
    const std::vector<std::vector<Vec2c>>& incident_tractions);

// 1-norm condition estimate of (I - K') built on the boundary; cheap probe
// used by tests scanning for interior traction-free eigenpairs.
double kprime_condition(const ElasticMedium& m, const SmoothBoundary& bd);

} // namespace elastdort
