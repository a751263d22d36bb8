#include "asymptotic.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace elastdort {

Mat2 l_tensor(const ElasticMedium& m, const Vec2& d) {
    return (m.lambda * Mat2::Identity() + 2.0 * m.mu * (d * d.transpose())) /
           (m.lambda + 2.0 * m.mu);
}

Mat2 h_tensor(const Vec2& d) {
    Mat2 ddp = perp(d) * d.transpose();
    return ddp + ddp.transpose();
}

std::pair<cd, cd> asymptotic_far_field(const ElasticMedium& m,
                                       const std::vector<SmallCavityDescriptor>& cavities,
                                       WaveMode mode, const Vec2& d, const Vec2& xh) {
    const double w2 = m.omega * m.omega;
    const double kp = m.kappa_p, ks = m.kappa_s;
    const double kin = wavenumber(m, mode);
    Vec2 xp = perp(xh);
    cd vp = 0.0, vs = 0.0;
    for (const auto& cav : cavities) {
        Vec2 Px = cav.polarization.transpose() * xh;  // (xh . P) as a vector
        Vec2 pol, bp, bs;
        if (mode == WaveMode::compressional) {
            Mat2 L = l_tensor(m, d);
            pol = d;
            bp = w2 * cav.area * d + 2.0 * kp * kp * (m.lambda + 2.0 * m.mu) * (L.transpose() * Px);
            bs = w2 * cav.area * d + 2.0 * kp * ks * (m.lambda + 2.0 * m.mu) * (L.transpose() * Px);
        } else {
            Mat2 H = h_tensor(d);
            Vec2 dp = perp(d);
            bp = w2 * cav.area * dp + 2.0 * kp * ks * m.mu * (H.transpose() * Px);
            bs = w2 * cav.area * dp + 2.0 * ks * ks * m.mu * (H.transpose() * Px);
        }
        cd php = std::exp(cd(0.0, cav.center.dot(kin * d - kp * xh)));
        cd phs = std::exp(cd(0.0, cav.center.dot(kin * d - ks * xh)));
        double r2 = cav.scale * cav.scale;
        vp += r2 * std::pow(kp, 1.5) * php * xh.dot(bp);
        vs += r2 * std::pow(ks, 1.5) * phs * xp.dot(bs);
    }
    return {vp, vs};
}

HerglotzKernel limit_operator_apply(const ElasticMedium& m,
                                    const std::vector<SmallCavityDescriptor>& cavities,
                                    const HerglotzKernel& f) {
    if (cavities.empty()) throw parameter_error("limit_operator_apply: no cavities");
    const int n = f.size();
    const double w2 = m.omega * m.omega;
    const double kp = m.kappa_p, ks = m.kappa_s, la = m.lambda, mu = m.mu;
    HerglotzKernel out = f;
    out.fp.setZero();
    out.fs.setZero();
    for (const auto& cav : cavities) {
        const Vec2& s = cav.center;
        // grid quadratures of the six s-dependent moments
        Vec2c Ip1 = Vec2c::Zero();
        cd Ip2 = 0.0;
        Mat2c Ip3 = Mat2c::Zero();
        Vec2c Is1 = Vec2c::Zero();
        Mat2c Is2 = Mat2c::Zero();
        Mat2c Is3 = Mat2c::Zero();
        for (int k = 0; k < n; ++k) {
            const Vec2& a = f.directions[k];
            Vec2 ap = perp(a);
            cd ep = f.weights[k] * f.fp[k] * std::exp(cd(0.0, kp * a.dot(s)));
            cd es = f.weights[k] * f.fs[k] * std::exp(cd(0.0, ks * a.dot(s)));
            Ip1 += ep * a.cast<cd>();
            Ip2 += ep;
            Ip3 += ep * (a * a.transpose()).cast<cd>();
            Is1 += es * ap.cast<cd>();
            Is2 += es * (ap * a.transpose()).cast<cd>();
            Is3 += es * (a * ap.transpose()).cast<cd>();
        }
        Mat2c Pt = cav.polarization.transpose().cast<cd>();
        for (int k = 0; k < n; ++k) {
            const Vec2& xh = f.directions[k];
            Vec2c xhc = xh.cast<cd>();
            Vec2c xpc = perp(xh).cast<cd>();
            Vec2c Ptx = Pt * xhc;
            Vec2c brp = w2 * cav.area * Ip1 + (2.0 * la * w2 / (la + 2.0 * mu)) * Ip2 * Ptx +
                        (4.0 * mu * w2 / (la + 2.0 * mu)) * (Ip3 * Ptx) + w2 * cav.area * Is1 +
                        2.0 * kp * ks * mu * ((Is2 + Is3) * Ptx);
            Vec2c brs = w2 * cav.area * Ip1 + (2.0 * la * kp * ks) * Ip2 * Ptx +
                        (4.0 * mu * kp * ks) * (Ip3 * Ptx) + w2 * cav.area * Is1 +
                        2.0 * w2 * ((Is2 + Is3) * Ptx);
            out.fp[k] += std::pow(kp, 1.5) * std::exp(cd(0.0, -kp * xh.dot(s))) *
                         (xhc.x() * brp.x() + xhc.y() * brp.y());
            out.fs[k] += std::pow(ks, 1.5) * std::exp(cd(0.0, -ks * xh.dot(s))) *
                         (xpc.x() * brs.x() + xpc.y() * brs.y());
        }
    }
    return out;
}

MatrixF matrix_f(const ElasticMedium& m, const Mat2& P) {
    MatrixF F;
    F.c1 = 2.0 * m.lambda * std::pow(m.kappa_p, 3.5) * M_PI;
    F.c2 = m.mu * std::pow(m.kappa_p, 3.5) * M_PI;
    F.c3 = m.mu * std::pow(m.kappa_s, 3.5) * M_PI;
    const double u = F.c1 + 3.0 * F.c2 + F.c3;   // coefficient of the "own" diagonal entry
    const double v = F.c1 + F.c2 - F.c3;         // coefficient of the opposite one
    const double w = F.c2 + F.c3;
    const double p11 = P(0, 0), p12 = P(0, 1), p21 = P(1, 0), p22 = P(1, 1);
    F.matrix << u * p11, v * p11, 2.0 * w * p12, 0.0,
                v * p22, u * p22, 2.0 * w * p21, 0.0,
                (u * p21 + v * p12) / 2.0, (v * p21 + u * p12) / 2.0, w * (p11 + p22), 0.0,
                (u * p21 - v * p12) / 2.0, (v * p21 - u * p12) / 2.0, w * (p22 - p11), 0.0;
    return F;
}

HerglotzKernel template_g(const ElasticMedium& m, const Vec2& s, int p, int n) {
    if (p != 1 && p != 2) throw parameter_error("template_g: p must be 1 or 2");
    HerglotzKernel k = zero_kernel(n);
    Vec2 ep = (p == 1) ? Vec2(1.0, 0.0) : Vec2(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
        const Vec2& xh = k.directions[j];
        k.fp[j] = std::pow(m.kappa_p, 1.5) * xh.dot(ep) *
                  std::exp(cd(0.0, -m.kappa_p * xh.dot(s)));
        k.fs[j] = std::pow(m.kappa_s, 1.5) * perp(xh).dot(ep) *
                  std::exp(cd(0.0, -m.kappa_s * xh.dot(s)));
    }
    return k;
}

HerglotzKernel template_h(const ElasticMedium& m, const Vec2& s, const Mat2c& A, int n) {
    HerglotzKernel k = zero_kernel(n);
    for (int j = 0; j < n; ++j) {
        const Vec2& xh = k.directions[j];
        Vec2c Ax = A * xh.cast<cd>();
        k.fp[j] = std::pow(m.kappa_p, 2.5) * (xh.x() * Ax.x() + xh.y() * Ax.y()) *
                  std::exp(cd(0.0, -m.kappa_p * xh.dot(s)));
        Vec2 xp = perp(xh);
        k.fs[j] = std::pow(m.kappa_s, 2.5) * (xp.x() * Ax.x() + xp.y() * Ax.y()) *
                  std::exp(cd(0.0, -m.kappa_s * xh.dot(s)));
    }
    return k;
}

std::vector<TheoreticalEigenpair> theoretical_eigensystem(const ElasticMedium& m,
                                                          const SmallCavityDescriptor& cav,
                                                          int n) {
    std::vector<TheoreticalEigenpair> out;
    const double lam_a =
        M_PI * m.omega * m.omega * cav.area * (std::pow(m.kappa_p, 1.5) + std::pow(m.kappa_s, 1.5));
    for (int p = 1; p <= 2; ++p) {
        TheoreticalEigenpair e;
        e.kind = (p == 1) ? EigKind::A1 : EigKind::A2;
        e.eigenvalue = lam_a;
        e.kernel = template_g(m, cav.center, p, n);
        out.push_back(std::move(e));
    }

    MatrixF F = matrix_f(m, cav.polarization);
    // column 4 is zero and rows 1-3 do not involve it: eigensolve the leading
    // 3x3 block, then recover the fourth component from row 4.
    Eigen::Matrix3d F3 = F.matrix.topLeftCorner<3, 3>();
    Eigen::EigenSolver<Eigen::Matrix3d> es(F3);
    bool degen = false;
    Eigen::Matrix3cd V = es.eigenvectors();
    {
        Eigen::JacobiSVD<Eigen::Matrix3cd> svd(V);
        double c = svd.singularValues()(0) / svd.singularValues()(2);
        if (!(c < 1e8)) degen = true;
    }
    for (int q = 0; q < 3; ++q) {
        cd zeta = es.eigenvalues()(q);
        Eigen::Vector3cd v = V.col(q);
        cd v4 = 0.0;
        if (std::abs(zeta) > 1e-300) {
            cd row4 = F.matrix(3, 0) * v(0) + F.matrix(3, 1) * v(1) + F.matrix(3, 2) * v(2);
            v4 = row4 / zeta;
        }
        Mat2c A;
        A << v(0), v(2) + v4, v(2) - v4, v(1);
        TheoreticalEigenpair e;
        e.kind = (q == 0) ? EigKind::B1 : (q == 1 ? EigKind::B2 : EigKind::B3);
        e.eigenvalue = zeta;
        e.kernel = template_h(m, cav.center, A, n);
        e.a_matrix = A;
        e.degenerate = degen;
        out.push_back(std::move(e));
    }
    return out;
}

cd kernel_inner(const ElasticMedium& m, const HerglotzKernel& f, const HerglotzKernel& g) {
    cd acc = 0.0;
    for (int k = 0; k < f.size(); ++k) {
        acc += (m.omega / m.kappa_p) * f.weights[k] * f.fp[k] * std::conj(g.fp[k]);
        acc += (m.omega / m.kappa_s) * f.weights[k] * f.fs[k] * std::conj(g.fs[k]);
    }
    return acc;
}

double kernel_norm(const ElasticMedium& m, const HerglotzKernel& f) {
    return std::sqrt(std::abs(kernel_inner(m, f, f)));
}

double residual_check(const ElasticMedium& m, const std::vector<SmallCavityDescriptor>& cavities,
                      const TheoreticalEigenpair& pair) {
    HerglotzKernel Ff = limit_operator_apply(m, cavities, pair.kernel);
    HerglotzKernel resid = Ff;
    resid.fp -= pair.eigenvalue * pair.kernel.fp;
    resid.fs -= pair.eigenvalue * pair.kernel.fs;
    double denom = std::abs(pair.eigenvalue) * kernel_norm(m, pair.kernel);
    if (denom == 0.0) return kernel_norm(m, resid);
    return kernel_norm(m, resid) / denom;
}

} // namespace elastdort
