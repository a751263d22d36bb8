#include "dort.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "nystrom.hpp"

namespace elastdort {

double unit_area(const RadialShape& s) {
    double acc = s.c0 * s.c0;
    for (double a : s.ac) acc += 0.5 * a * a;
    for (double b : s.bs) acc += 0.5 * b * b;
    return M_PI * acc;
}

Eigen::VectorXd FarFieldMatrix::weight_vector() const {
    const int n = n_dir();
    Eigen::VectorXd w(2 * n);
    for (int j = 0; j < n; ++j) {
        w[j] = dir_weights[j] * medium.omega / medium.kappa_p;
        w[n + j] = dir_weights[j] * medium.omega / medium.kappa_s;
    }
    return w;
}

namespace {

void fill_column(FarFieldMatrix& F, int col, WaveMode mode, const Eigen::VectorXcd& vp,
                 const Eigen::VectorXcd& vs) {
    const int n = F.n_dir();
    double kin = wavenumber(F.medium, mode);
    cd fac = std::exp(cd(0.0, -M_PI / 4.0)) * std::sqrt(kin / F.medium.omega) *
             F.dir_weights[col % n];
    F.matrix.col(col).head(n) = fac * vp;
    F.matrix.col(col).tail(n) = fac * vs;
}

} // namespace

FarFieldMatrix assemble_operator(Engine engine, const ElasticMedium& m, const CavitySet& cavities,
                                 int n_directions, const AssembleOptions& opt) {
    FarFieldMatrix F;
    F.medium = m;
    F.n_grid = n_directions;
    F.directions = uniform_directions(n_directions);
    F.dir_weights = Eigen::VectorXd::Constant(n_directions, 2.0 * M_PI / n_directions);
    F.matrix = Eigen::MatrixXcd::Zero(2 * n_directions, 2 * n_directions);
    if (cavities.empty()) return F;

    const int n = n_directions;
    Eigen::VectorXcd vp(n), vs(n);

    if (engine == Engine::mie) {
        std::vector<DiskCavity> disks;
        for (const auto& c : cavities) {
            if (!c.is_disk())
                throw parameter_error("assemble_operator: mie engine requires discal cavities");
            disks.emplace_back(c.center, c.disk_radius());
        }
        MieDiskSolver solver(m, disks);
        for (int k = 0; k < n; ++k)
            for (WaveMode mode : {WaveMode::compressional, WaveMode::shear}) {
                solver.far_field(F.directions[k], mode, F.directions, vp, vs);
                int col = (mode == WaveMode::compressional) ? k : n + k;
                fill_column(F, col, mode, vp, vs);
            }
        return F;
    }

    if (engine == Engine::bem) {
        for (const auto& c : cavities) {
            SmoothBoundary bd(c.shape, c.center, c.scale, opt.n_boundary_points);
            NystromSolver solver(m, bd);
            for (int k = 0; k < n; ++k)
                for (WaveMode mode : {WaveMode::compressional, WaveMode::shear}) {
                    auto rhs = solver.plane_wave_traction(F.directions[k], mode);
                    BoundaryDensity phi = solver.solve(rhs);
                    Eigen::VectorXcd cvp, cvs;
                    far_field(m, bd, phi, F.directions, cvp, cvs);
                    int col = (mode == WaveMode::compressional) ? k : n + k;
                    double kin = wavenumber(m, mode);
                    cd fac = std::exp(cd(0.0, -M_PI / 4.0)) * std::sqrt(kin / m.omega) *
                             F.dir_weights[k];
                    F.matrix.col(col).head(n) += fac * cvp;
                    F.matrix.col(col).tail(n) += fac * cvs;
                }
        }
        return F;
    }

    // asymptotic engine: leading-order formulas with the -gamma prefactor
    auto descs = cavity_descriptors(m, cavities, opt.n_boundary_points);
    const cd gamma = std::exp(cd(0.0, M_PI / 4.0)) / (std::sqrt(8.0 * M_PI) * m.omega * m.omega);
    for (int k = 0; k < n; ++k)
        for (WaveMode mode : {WaveMode::compressional, WaveMode::shear}) {
            for (int j = 0; j < n; ++j) {
                auto [ap, as] = asymptotic_far_field(m, descs, mode, F.directions[k], F.directions[j]);
                vp[j] = -gamma * ap;
                vs[j] = -gamma * as;
            }
            int col = (mode == WaveMode::compressional) ? k : n + k;
            fill_column(F, col, mode, vp, vs);
        }
    return F;
}

FarFieldMatrix add_noise(const FarFieldMatrix& F, double level, std::uint64_t seed) {
    if (level < 0.0) throw parameter_error("add_noise: level must be >= 0");
    FarFieldMatrix out = F;
    if (level == 0.0) return out;
    const double dim = double(F.matrix.rows());
    const double sigma = level * F.matrix.norm() / dim;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, sigma / std::sqrt(2.0));
    for (Eigen::Index c = 0; c < out.matrix.cols(); ++c)
        for (Eigen::Index r = 0; r < out.matrix.rows(); ++r)
            out.matrix(r, c) += cd(gauss(rng), gauss(rng));
    return out;
}

namespace {
bool in_arcs(double angle, const ApertureArcs& arcs) {
    // half-open [lo, hi) with a tolerance so exact grid angles at the closed
    // endpoint are kept regardless of rounding in their recovery
    const double tol = 1e-12;
    double a = std::fmod(angle, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    for (auto [lo, hi] : arcs) {
        if (hi - lo >= 2.0 * M_PI) return true;
        double l = std::fmod(lo, 2.0 * M_PI);
        if (l < 0.0) l += 2.0 * M_PI;
        double h = std::fmod(hi, 2.0 * M_PI);
        if (h < 0.0) h += 2.0 * M_PI;
        bool inside = (l <= h) ? (a >= l - tol && a < h - tol) : (a >= l - tol || a < h - tol);
        if (inside) return true;
    }
    return false;
}
} // namespace

FarFieldMatrix apply_aperture(const FarFieldMatrix& F, const ApertureArcs& arcs) {
    if (arcs.empty()) throw parameter_error("apply_aperture: empty arc list");
    const int n = F.n_dir();
    std::vector<int> keep;
    for (int j = 0; j < n; ++j) {
        double th = std::atan2(F.directions[j].y(), F.directions[j].x());
        if (in_arcs(th, arcs)) keep.push_back(j);
    }
    if (keep.empty()) throw parameter_error("apply_aperture: aperture excludes all grid directions");
    FarFieldMatrix out;
    out.medium = F.medium;
    out.n_grid = F.n_grid;
    const int k = static_cast<int>(keep.size());
    out.directions.resize(k);
    out.dir_weights.resize(k);
    out.matrix.resize(2 * k, 2 * k);
    for (int a = 0; a < k; ++a) {
        out.directions[a] = F.directions[keep[a]];
        out.dir_weights[a] = F.dir_weights[keep[a]];
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            out.matrix(a, b) = F.matrix(keep[a], keep[b]);
            out.matrix(a, k + b) = F.matrix(keep[a], n + keep[b]);
            out.matrix(k + a, b) = F.matrix(n + keep[a], keep[b]);
            out.matrix(k + a, k + b) = F.matrix(n + keep[a], n + keep[b]);
        }
    return out;
}

std::pair<int, double> significance_gap(const Eigen::VectorXd& eigs, int m_guess) {
    int len = static_cast<int>(eigs.size());
    while (len > 0 && eigs[len - 1] <= 0.0) --len;
    if (len == 0) return {0, 0.0};
    int kmax = len;
    if (m_guess > 0) kmax = std::min(kmax, 6 * m_guess + 1);
    int best = std::min(len, kmax);  // flat spectrum: everything in the window
    double best_ratio = 0.0;
    for (int k = 1; k < kmax; ++k) {
        double ratio = eigs[k - 1] / eigs[k];
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = k;
        }
    }
    return {best, best_ratio};
}

TimeReversalEigenSystem eigensystem(const FarFieldMatrix& F, int m_guess) {
    const int n = F.n_dir();
    Eigen::VectorXd W = F.weight_vector();
    Eigen::VectorXd Wh = W.cwiseSqrt();
    Eigen::MatrixXcd G = Wh.asDiagonal() * F.matrix * Wh.cwiseInverse().asDiagonal();
    Eigen::MatrixXcd T = G * G.adjoint();
    T = 0.5 * (T + T.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T);

    TimeReversalEigenSystem sys;
    const int dim = 2 * n;
    sys.eigenvalues.resize(dim);
    sys.eigenvectors.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        double v = es.eigenvalues()(dim - 1 - i);
        sys.eigenvalues[i] = std::max(v, 0.0);
        Eigen::VectorXcd g = es.eigenvectors().col(dim - 1 - i);
        Eigen::VectorXcd f = Wh.cwiseInverse().asDiagonal() * g;
        HerglotzKernel k;
        k.directions = F.directions;
        k.weights = F.dir_weights;
        k.fp = f.head(n);
        k.fs = f.tail(n);
        sys.eigenvectors.push_back(std::move(k));
    }
    auto [cnt, ratio] = significance_gap(sys.eigenvalues, m_guess);
    sys.significant_count = cnt;
    sys.gap_ratio = ratio;
    return sys;
}

double table_normalization(const FarFieldMatrix& F) {
    double c = double(F.n_grid) * F.n_grid / (8.0 * M_PI * M_PI);
    return c * c;
}

double normality_residual(const FarFieldMatrix& F) {
    Eigen::VectorXd Wh = F.weight_vector().cwiseSqrt();
    Eigen::MatrixXcd G = Wh.asDiagonal() * F.matrix * Wh.cwiseInverse().asDiagonal();
    double g2 = G.norm();
    return (G * G.adjoint() - G.adjoint() * G).norm() / (g2 * g2);
}

double reciprocity_residual(const FarFieldMatrix& F) {
    const int n = F.n_dir();
    if (n != F.n_grid || n % 2 != 0)
        throw parameter_error("reciprocity_residual: needs the full symmetric grid");
    Eigen::VectorXi rp(2 * n);
    for (int j = 0; j < n; ++j) {
        int op = (j + n / 2) % n;
        rp[j] = op;
        rp[n + j] = n + op;
    }
    Eigen::MatrixXcd RFR(2 * n, 2 * n);
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c) RFR(r, c) = F.matrix(rp[r], rp[c]);
    Eigen::VectorXd W = F.weight_vector();
    Eigen::MatrixXcd adj_w = W.cwiseInverse().asDiagonal() * F.matrix.adjoint() * W.asDiagonal();
    return (adj_w - RFR.conjugate()).norm() / F.matrix.norm();
}

Eigen::VectorXcd f_eigenvalues(const FarFieldMatrix& F) {
    Eigen::VectorXd Wh = F.weight_vector().cwiseSqrt();
    Eigen::MatrixXcd G = Wh.asDiagonal() * F.matrix * Wh.cwiseInverse().asDiagonal();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(G);
    Eigen::VectorXcd ev = es.eigenvalues();
    std::sort(ev.data(), ev.data() + ev.size(),
              [](cd a, cd b) { return std::abs(a) > std::abs(b); });
    return ev;
}

std::vector<SmallCavityDescriptor> cavity_descriptors(const ElasticMedium& m,
                                                      const CavitySet& cavities,
                                                      int n_boundary_points) {
    std::vector<SmallCavityDescriptor> out;
    for (const auto& c : cavities) {
        SmoothBoundary unit(c.shape, Vec2::Zero(), 1.0, n_boundary_points);
        Mat2 P = polarization_tensor(m, unit);
        out.emplace_back(c.center, unit_area(c.shape), P, c.scale);
    }
    return out;
}

} // namespace elastdort
