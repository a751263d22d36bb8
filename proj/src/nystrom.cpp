#include "nystrom.hpp"

#include <cmath>

#include "kernels.hpp"
#include "radial.hpp"

namespace elastdort {

namespace {

const Mat2 JROT = (Mat2() << 0.0, 1.0, -1.0, 0.0).finished();

// 2 T_{nu(x)} Phi(x,y) with the radiating kernel.
Mat2c kernel_block_dyn(const ElasticMedium& m, const Vec2& x, const Vec2& nu, const Vec2& y) {
    Vec2 e = x - y;
    double r = e.norm();
    Vec2 rh = e / r;
    auto t = detail::traction_coeffs(m, r, detail::RadialKind::hankel);
    double rn = rh.dot(nu);
    Mat2c K = t.a * rn * Mat2c::Identity();
    K += (t.b * rn) * (rh * rh.transpose()).cast<cd>();
    K += t.c * (nu * rh.transpose()).cast<cd>();
    K += t.a * (rh * nu.transpose()).cast<cd>();
    return 2.0 * K;
}

// Coefficient of ln(4 sin^2((t-s)/2)) in the kernel above: the J-substituted
// kernel times i/pi (H_n = (2i/pi) ln(r) J_n + entire, and ln r contributes
// half of ln(4 sin^2)).
Mat2c kernel_block_log(const ElasticMedium& m, const Vec2& x, const Vec2& nu, const Vec2& y) {
    Vec2 e = x - y;
    double r = e.norm();
    Vec2 rh = e / r;
    auto t = detail::traction_coeffs(m, r, detail::RadialKind::besselj);
    double rn = rh.dot(nu);
    Mat2c K = t.a * rn * Mat2c::Identity();
    K += (t.b * rn) * (rh * rh.transpose()).cast<cd>();
    K += t.c * (nu * rh.transpose()).cast<cd>();
    K += t.a * (rh * nu.transpose()).cast<cd>();
    return cd(0.0, 2.0 / M_PI) * K;
}

Mat2 kernel_block_static(const ElasticMedium& m, const Vec2& x, const Vec2& nu, const Vec2& y) {
    Vec2 e = x - y;
    double r = e.norm();
    Vec2 rh = e / r;
    double eta = detail::kelvin_eta(m);
    double B = detail::kelvin_b(m);
    double rn = rh.dot(nu);
    Mat2 K = (-eta / r) * rn * Mat2::Identity();
    K += (-4.0 * m.mu * B / r) * rn * (rh * rh.transpose());
    K += (eta / r) * (nu * rh.transpose());
    K += (-eta / r) * (rh * nu.transpose());
    return 2.0 * K;
}

// Diagonal limit of the smooth remainder after the log and Cauchy models are
// subtracted (includes the |x'| arc factor).
Mat2 diagonal_remainder(const ElasticMedium& m, const SmoothBoundary& bd, int i) {
    double eta = detail::kelvin_eta(m);
    double B = detail::kelvin_b(m);
    const Vec2& d1 = bd.d1(i);
    const Vec2& d2 = bd.d2(i);
    double sp2 = bd.speed(i) * bd.speed(i);
    double cr = d1.x() * d2.y() - d1.y() * d2.x();
    Vec2 tt = bd.tangent(i);
    Mat2 S = -cr / sp2 * (eta * Mat2::Identity() + 4.0 * m.mu * B * (tt * tt.transpose()));
    S -= eta * d1.dot(d2) / sp2 * JROT;
    return S;
}

template <typename MatT>
double hager_condition(const Eigen::PartialPivLU<MatT>& lu, const MatT& A) {
    const int n = static_cast<int>(A.rows());
    using VecT = Eigen::Matrix<typename MatT::Scalar, Eigen::Dynamic, 1>;
    VecT x = VecT::Constant(n, typename MatT::Scalar(1.0 / n));
    double est = 0.0;
    int last = -1;
    for (int iter = 0; iter < 5; ++iter) {
        VecT y = lu.solve(x);
        est = y.template lpNorm<1>();
        VecT xi(n);
        for (int k = 0; k < n; ++k) {
            double a = std::abs(cd(y[k]));
            xi[k] = (a == 0.0) ? typename MatT::Scalar(1.0)
                               : typename MatT::Scalar(y[k] / a);
        }
        VecT z = lu.adjoint().solve(xi);
        int j = 0;
        double zmax = 0.0;
        for (int k = 0; k < n; ++k) {
            double a = std::abs(cd(z[k]));
            if (a > zmax) { zmax = a; j = k; }
        }
        if (j == last) break;
        double zx = std::abs(cd(z.dot(x)));
        if (zmax <= zx) break;
        x = VecT::Zero(n);
        x[j] = 1.0;
        last = j;
    }
    double a1 = 0.0;
    for (int c = 0; c < n; ++c) a1 = std::max(a1, A.col(c).template lpNorm<1>());
    return a1 * est;
}

} // namespace

Eigen::MatrixXd kress_log_weights(int n) {
    if (n % 2 != 0) throw parameter_error("kress_log_weights: n must be even");
    const int m = n / 2;
    const double h = 2.0 * M_PI / n;
    std::vector<double> Rd(n);
    for (int d = 0; d < n; ++d) {
        double acc = 0.0;
        for (int k = 1; k < m; ++k) acc += std::cos(k * d * h) / k;
        Rd[d] = -(2.0 * M_PI / m) * acc - (M_PI / (m * m)) * std::cos(m * d * h);
    }
    Eigen::MatrixXd R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R(i, j) = Rd[((i - j) % n + n) % n];
    return R;
}

Eigen::MatrixXd hilbert_cot_weights(int n) {
    if (n % 2 != 0) throw parameter_error("hilbert_cot_weights: n must be even");
    const double h = 2.0 * M_PI / n;
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (((j - i) % 2 + 2) % 2 == 1) G(i, j) = 2.0 * h / std::tan((j - i) * h / 2.0);
    return G;
}

Eigen::MatrixXcd nystrom_kprime(const ElasticMedium& m, const SmoothBoundary& bd) {
    const int n = bd.size();
    const double h = 2.0 * M_PI / n;
    const double eta = detail::kelvin_eta(m);
    Eigen::MatrixXd R = kress_log_weights(n);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    const Mat2c JC = JROT.cast<cd>();
    for (int i = 0; i < n; ++i) {
        const Vec2& xi = bd.node(i);
        const Vec2& nui = bd.normal(i);
        for (int j = 0; j < n; ++j) {
            Mat2c blk;
            if (i == j) {
                blk = (h * diagonal_remainder(m, bd, i)).cast<cd>();
            } else {
                double dt = bd.param(i) - bd.param(j);
                double lnfac = std::log(4.0 * std::pow(std::sin(dt / 2.0), 2));
                double cotv = 1.0 / std::tan(-dt / 2.0);  // cot((t_j - t_i)/2)
                Mat2c Kf = kernel_block_dyn(m, xi, nui, bd.node(j)) * bd.speed(j);
                Mat2c Kl = kernel_block_log(m, xi, nui, bd.node(j)) * bd.speed(j);
                Mat2c S = Kf - Kl * lnfac + eta * cotv * JC;
                double gij = (((j - i) % 2 + 2) % 2 == 1) ? 2.0 * h / std::tan(-dt / 2.0) : 0.0;
                blk = R(i, j) * Kl + h * S - gij * eta * JC;
            }
            M.block<2, 2>(2 * i, 2 * j) = blk;
        }
    }
    return M;
}

Eigen::MatrixXd nystrom_kprime_static(const ElasticMedium& m, const SmoothBoundary& bd) {
    const int n = bd.size();
    const double h = 2.0 * M_PI / n;
    const double eta = detail::kelvin_eta(m);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const Vec2& xi = bd.node(i);
        const Vec2& nui = bd.normal(i);
        for (int j = 0; j < n; ++j) {
            Mat2 blk;
            if (i == j) {
                blk = h * diagonal_remainder(m, bd, i);
            } else {
                double dt = bd.param(i) - bd.param(j);
                double cotv = 1.0 / std::tan(-dt / 2.0);
                Mat2 Kf = kernel_block_static(m, xi, nui, bd.node(j)) * bd.speed(j);
                Mat2 S = Kf + eta * cotv * JROT;
                double gij = (((j - i) % 2 + 2) % 2 == 1) ? 2.0 * h / std::tan(-dt / 2.0) : 0.0;
                blk = h * S - gij * eta * JROT;
            }
            M.block<2, 2>(2 * i, 2 * j) = blk;
        }
    }
    return M;
}

NystromSolver::NystromSolver(const ElasticMedium& m, const SmoothBoundary& bd)
    : medium_(m), bd_(bd) {
    Eigen::MatrixXcd A =
        Eigen::MatrixXcd::Identity(2 * bd.size(), 2 * bd.size()) - nystrom_kprime(m, bd);
    lu_.compute(A);
    cond_ = hager_condition(lu_, A);
    if (!(cond_ < 1e12))
        throw numerical_singularity_error(
            "NystromSolver: boundary system is near-singular (interior traction-free eigenpair?)",
            cond_);
}

BoundaryDensity NystromSolver::solve(const std::vector<Vec2c>& g) const {
    const int n = bd_.size();
    if (static_cast<int>(g.size()) != n)
        throw parameter_error("NystromSolver::solve: traction data size mismatch");
    Eigen::VectorXcd rhs(2 * n);
    for (int i = 0; i < n; ++i) {
        rhs[2 * i] = 2.0 * g[i].x();
        rhs[2 * i + 1] = 2.0 * g[i].y();
    }
    Eigen::VectorXcd sol = lu_.solve(rhs);
    BoundaryDensity phi(n);
    for (int i = 0; i < n; ++i) phi[i] = Vec2c(sol[2 * i], sol[2 * i + 1]);
    return phi;
}

std::vector<Vec2c> NystromSolver::plane_wave_traction(const Vec2& alpha, WaveMode mode) const {
    std::vector<Vec2c> g(bd_.size());
    IncidentPlaneWave w(alpha, mode);
    for (int i = 0; i < bd_.size(); ++i) {
        FieldSample s = plane_wave_field(medium_, w, bd_.node(i));
        g[i] = traction(medium_, bd_.normal(i), s.jacobian);
    }
    return g;
}

void far_field(const ElasticMedium& m, const SmoothBoundary& bd, const BoundaryDensity& phi,
               const std::vector<Vec2>& dirs, Eigen::VectorXcd& vp, Eigen::VectorXcd& vs) {
    const cd gamma = std::exp(cd(0.0, M_PI / 4.0)) / (std::sqrt(8.0 * M_PI) * m.omega * m.omega);
    const int nd = static_cast<int>(dirs.size());
    vp.resize(nd);
    vs.resize(nd);
    for (int k = 0; k < nd; ++k) {
        const Vec2& xh = dirs[k];
        Vec2 xp = perp(xh);
        Vec2c accp = Vec2c::Zero(), accs = Vec2c::Zero();
        for (int j = 0; j < bd.size(); ++j) {
            double w = bd.arc_weight(j);
            accp += w * std::exp(cd(0.0, -m.kappa_p * xh.dot(bd.node(j)))) * phi[j];
            accs += w * std::exp(cd(0.0, -m.kappa_s * xh.dot(bd.node(j)))) * phi[j];
        }
        vp[k] = gamma * std::pow(m.kappa_p, 1.5) * (xh.cast<cd>().dot(accp));
        vs[k] = gamma * std::pow(m.kappa_s, 1.5) * (xp.cast<cd>().dot(accs));
    }
}

Mat2 polarization_tensor(const ElasticMedium& m, const SmoothBoundary& bd) {
    const int n = bd.size();
    Eigen::MatrixXd A =
        Eigen::MatrixXd::Identity(2 * n, 2 * n) - nystrom_kprime_static(m, bd);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    double cond = hager_condition(lu, A);
    if (!(cond < 1e12))
        throw numerical_singularity_error("polarization_tensor: static system singular", cond);
    Eigen::VectorXd rhs(2 * n);
    for (int i = 0; i < n; ++i) {
        rhs[2 * i] = bd.normal(i).x();
        rhs[2 * i + 1] = bd.normal(i).y();
    }
    Eigen::VectorXd w = lu.solve(rhs);
    Mat2 P = Mat2::Zero();
    for (int i = 0; i < n; ++i)
        P -= bd.arc_weight(i) * bd.node(i) * Eigen::RowVector2d(w[2 * i], w[2 * i + 1]);
    return P;
}

std::vector<BoundaryDensity> solve_density_coupled(
    const ElasticMedium& m, const std::vector<SmoothBoundary>& bds,
    const std::vector<std::vector<Vec2c>>& gs) {
    const int nb = static_cast<int>(bds.size());
    std::vector<int> offset(nb + 1, 0);
    for (int b = 0; b < nb; ++b) offset[b + 1] = offset[b] + 2 * bds[b].size();
    const int ntot = offset[nb];
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(ntot, ntot);
    for (int a = 0; a < nb; ++a) {
        A.block(offset[a], offset[a], 2 * bds[a].size(), 2 * bds[a].size()) -=
            nystrom_kprime(m, bds[a]);
        for (int b = 0; b < nb; ++b) {
            if (a == b) continue;
            const double h = 2.0 * M_PI / bds[b].size();
            for (int i = 0; i < bds[a].size(); ++i)
                for (int j = 0; j < bds[b].size(); ++j) {
                    Mat2c blk = h * bds[b].speed(j) *
                                kernel_block_dyn(m, bds[a].node(i), bds[a].normal(i), bds[b].node(j));
                    A.block<2, 2>(offset[a] + 2 * i, offset[b] + 2 * j) = -blk;
                }
        }
    }
    Eigen::VectorXcd rhs(ntot);
    for (int b = 0; b < nb; ++b)
        for (int i = 0; i < bds[b].size(); ++i) {
            rhs[offset[b] + 2 * i] = 2.0 * gs[b][i].x();
            rhs[offset[b] + 2 * i + 1] = 2.0 * gs[b][i].y();
        }
    Eigen::VectorXcd sol = Eigen::PartialPivLU<Eigen::MatrixXcd>(A).solve(rhs);
    std::vector<BoundaryDensity> out(nb);
    for (int b = 0; b < nb; ++b) {
        out[b].resize(bds[b].size());
        for (int i = 0; i < bds[b].size(); ++i)
            out[b][i] = Vec2c(sol[offset[b] + 2 * i], sol[offset[b] + 2 * i + 1]);
    }
    return out;
}

double kprime_condition(const ElasticMedium& m, const SmoothBoundary& bd) {
    Eigen::MatrixXcd A =
        Eigen::MatrixXcd::Identity(2 * bd.size(), 2 * bd.size()) - nystrom_kprime(m, bd);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    return hager_condition(lu, A);
}

} // namespace elastdort
