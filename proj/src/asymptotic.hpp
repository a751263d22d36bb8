#pragma once

#include <vector>

#include "medium.hpp"

namespace elastdort {

// L(lambda,mu,d) = (lambda I + 2 mu d(x)d) / (lambda + 2 mu)
Mat2 l_tensor(const ElasticMedium& m, const Vec2& d);
// H(d) = d_perp (x) d + (d_perp (x) d)^T
Mat2 h_tensor(const Vec2& d);

struct SmallCavityDescriptor {
    Vec2 center;          // s_l
    double area;          // |D_l| of the unit-scale shape
    Mat2 polarization;    // P_l of the unit-scale shape
    double scale = 1.0;   // rho

    SmallCavityDescriptor(const Vec2& s, double a, const Mat2& P, double rho = 1.0)
        : center(s), area(a), polarization(P), scale(rho) {
        if (!(a > 0.0)) throw parameter_error("SmallCavityDescriptor: area must be positive");
        if (!(rho > 0.0)) throw parameter_error("SmallCavityDescriptor: scale must be positive");
    }
};

// Leading-order far-field pair (vp, vs) of the small-cavity expansion for a
// unit plane wave of the given mode, summed over cavities with their rho_l^2
// factors folded in; the common -gamma prefactor is applied by the caller.
std::pair<cd, cd> asymptotic_far_field(const ElasticMedium& m,
                                       const std::vector<SmallCavityDescriptor>& cavities,
                                       WaveMode mode, const Vec2& d, const Vec2& xhat);

// Limit far-field operator F^0 applied to a kernel on its direction grid.
HerglotzKernel limit_operator_apply(const ElasticMedium& m,
                                    const std::vector<SmallCavityDescriptor>& cavities,
                                    const HerglotzKernel& f);

// Matrix representation of F^0 restricted to span{h_{l,1..4}}:
// 4x4 with identically zero fourth column; constants
// c1 = 2 lambda kp^{7/2} pi, c2 = mu kp^{7/2} pi, c3 = mu ks^{7/2} pi.
struct MatrixF {
    Eigen::Matrix4d matrix;
    double c1, c2, c3;
};
MatrixF matrix_f(const ElasticMedium& m, const Mat2& polarization);

enum class EigKind { A1, A2, B1, B2, B3 };

struct TheoreticalEigenpair {
    EigKind kind;
    cd eigenvalue;
    HerglotzKernel kernel;
    Mat2c a_matrix;       // B-type only
    bool degenerate = false;
};

// The five approximate eigenpairs of F^0 for one cavity: two A-type
// (lambda^a = pi w^2 |D| (kp^{3/2} + ks^{3/2}), kernels g_{l,p}) and three
// B-type (zeta_q from the leading 3x3 block of F, kernels h_{l,q}).
std::vector<TheoreticalEigenpair> theoretical_eigensystem(const ElasticMedium& m,
                                                          const SmallCavityDescriptor& cavity,
                                                          int n_directions);

// ||F0 g - lambda g|| / ||lambda g|| in the weighted kernel norm.
double residual_check(const ElasticMedium& m, const std::vector<SmallCavityDescriptor>& cavities,
                      const TheoreticalEigenpair& pair);

// Weighted inner product (f,g) = (w/kp) sum w_k fp conj(gp) + (w/ks) sum w_k fs conj(gs).
cd kernel_inner(const ElasticMedium& m, const HerglotzKernel& f, const HerglotzKernel& g);
double kernel_norm(const ElasticMedium& m, const HerglotzKernel& f);

// Template kernels on an n-direction grid.
HerglotzKernel template_g(const ElasticMedium& m, const Vec2& center, int p, int n_directions);
HerglotzKernel template_h(const ElasticMedium& m, const Vec2& center, const Mat2c& A,
                          int n_directions);

} // namespace elastdort
