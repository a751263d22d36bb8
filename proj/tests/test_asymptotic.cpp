#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "experiment.hpp"
#include "nystrom.hpp"
#include "oracles.hpp"

using namespace elastdort;

namespace {
const ElasticMedium MED = make_medium(1.0, 2.0, 2.0);

SmallCavityDescriptor origin_disk() {
    SmoothBoundary unit(disk_shape(), Vec2::Zero(), 1.0, 256);
    return SmallCavityDescriptor(Vec2::Zero(), M_PI, polarization_tensor(MED, unit), 1.0);
}

HerglotzKernel random_kernel(int n) {
    HerglotzKernel k = zero_kernel(n);
    for (int j = 0; j < n; ++j) {
        k.fp[j] = oracle::crand();
        k.fs[j] = oracle::crand();
    }
    return k;
}
} // namespace

TEST_CASE("limit operator on the zero kernel") {
    auto d = origin_disk();
    HerglotzKernel out = limit_operator_apply(MED, {d}, zero_kernel(90));
    CHECK(out.fp.norm() == 0.0);
    CHECK(out.fs.norm() == 0.0);
}

TEST_CASE("templates are eigenfunctions for a single origin cavity") {
    CHECK(theory::template_residual_single(MED) < 1e-10);
}

TEST_CASE("zero mode of the invariant subspace") {
    auto d = origin_disk();
    Mat2c A4;
    A4 << 0.0, 1.0, -1.0, 0.0;
    HerglotzKernel h4 = template_h(MED, Vec2::Zero(), A4, 360);
    HerglotzKernel out = limit_operator_apply(MED, {d}, h4);
    CHECK(kernel_norm(MED, out) < 1e-10 * kernel_norm(MED, h4));
}

TEST_CASE("limit operator range has dimension at most 6M") {
    auto d = origin_disk();
    const int nd = 120, trials = 50;
    Eigen::MatrixXcd outs(2 * nd, trials);
    for (int t = 0; t < trials; ++t) {
        HerglotzKernel out = limit_operator_apply(MED, {d}, random_kernel(nd));
        outs.col(t).head(nd) = out.fp;
        outs.col(t).tail(nd) = out.fs;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(outs);
    const auto& sv = svd.singularValues();
    CHECK(sv(6) / sv(0) < 1e-10);   // rank <= 6 for one cavity
    CHECK(sv(4) / sv(0) > 1e-6);    // five significant directions
}

TEST_CASE("range containment in the analytic template space") {
    auto d = origin_disk();
    const int nd = 120;
    // basis: g_1, g_2, h(A_1..A_4)
    std::vector<HerglotzKernel> basis;
    basis.push_back(template_g(MED, d.center, 1, nd));
    basis.push_back(template_g(MED, d.center, 2, nd));
    Mat2c A1, A2, A3, A4;
    A1 << 1, 0, 0, 0; A2 << 0, 0, 0, 1; A3 << 0, 1, 1, 0; A4 << 0, 1, -1, 0;
    for (const Mat2c& A : {A1, A2, A3, A4}) basis.push_back(template_h(MED, d.center, A, nd));

    HerglotzKernel out = limit_operator_apply(MED, {d}, random_kernel(nd));
    // project onto span(basis) in the weighted inner product
    const int nb = int(basis.size());
    Eigen::MatrixXcd G(nb, nb);
    Eigen::VectorXcd rhs(nb);
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) G(i, j) = kernel_inner(MED, basis[j], basis[i]);
        rhs[i] = kernel_inner(MED, out, basis[i]);
    }
    Eigen::VectorXcd c = G.fullPivLu().solve(rhs);
    HerglotzKernel res = out;
    for (int j = 0; j < nb; ++j) {
        res.fp -= c[j] * basis[j].fp;
        res.fs -= c[j] * basis[j].fs;
    }
    CHECK(kernel_norm(MED, res) < 1e-8 * kernel_norm(MED, out));
}

TEST_CASE("matrix F literal structure for diagonal polarization") {
    MatrixF Fz = matrix_f(MED, Mat2::Zero());
    CHECK(Fz.matrix.norm() == 0.0);

    double p = -1.3;
    MatrixF F = matrix_f(MED, p * Mat2::Identity());
    const double c1 = F.c1, c2 = F.c2, c3 = F.c3;
    CHECK(F.c1 == doctest::Approx(2 * MED.lambda * std::pow(MED.kappa_p, 3.5) * M_PI));
    CHECK(F.c2 == doctest::Approx(MED.mu * std::pow(MED.kappa_p, 3.5) * M_PI));
    CHECK(F.c3 == doctest::Approx(MED.mu * std::pow(MED.kappa_s, 3.5) * M_PI));
    Eigen::Matrix4d want;
    want << (c1 + 3 * c2 + c3) * p, (c1 + c2 - c3) * p, 0, 0,
            (c1 + c2 - c3) * p, (c1 + 3 * c2 + c3) * p, 0, 0,
            0, 0, 2 * (c2 + c3) * p, 0,
            0, 0, 0, 0;
    CHECK((F.matrix - want).norm() <= 1e-13 * want.norm());
    // column 4 identically zero, zero eigenvalue carried by (0,0,0,1)
    CHECK(F.matrix.col(3).norm() == 0.0);

    // eigenvalues against a full 4x4 eigensolve oracle
    Eigen::EigenSolver<Eigen::Matrix4d> es(F.matrix);
    std::vector<double> got;
    for (int i = 0; i < 4; ++i) got.push_back(es.eigenvalues()(i).real());
    std::sort(got.begin(), got.end());
    std::vector<double> expect = {2 * (c1 + 2 * c2) * p, 2 * (c2 + c3) * p, 2 * (c2 + c3) * p, 0.0};
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("matrix F spectrum is rotation invariant") {
    Mat2 P;
    P << -2.0, 0.4, 0.4, -1.1;
    double th = 0.6;
    Mat2 Q;
    Q << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    Eigen::EigenSolver<Eigen::Matrix4d> a(matrix_f(MED, P).matrix);
    Eigen::EigenSolver<Eigen::Matrix4d> b(matrix_f(MED, Q * P * Q.transpose()).matrix);
    std::vector<double> ea, eb;
    for (int i = 0; i < 4; ++i) {
        ea.push_back(a.eigenvalues()(i).real());
        eb.push_back(b.eigenvalues()(i).real());
    }
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    for (int i = 0; i < 4; ++i) CHECK(ea[i] == doctest::Approx(eb[i]).epsilon(1e-10));
}

TEST_CASE("theoretical eigensystem of a small disk") {
    SmallCavityDescriptor d(Vec2(0, 0), M_PI * 0.002 * 0.002, origin_disk().polarization, 0.002);
    auto pairs = theoretical_eigensystem(MED, d, 180);
    REQUIRE(pairs.size() == 5);
    double lam_a = M_PI * 4.0 * (M_PI * 4e-6) *
                   (std::pow(2.0 / std::sqrt(5.0), 1.5) + std::pow(std::sqrt(2.0), 1.5));
    CHECK(pairs[0].eigenvalue.real() == doctest::Approx(lam_a).epsilon(1e-12));
    CHECK(pairs[0].eigenvalue == pairs[1].eigenvalue);  // exact A-type degeneracy

    // B-type eigenvalues come from the diagonal-P matrix F
    MatrixF F = matrix_f(MED, d.polarization);
    double p = d.polarization(0, 0);
    std::vector<double> zeta = {2 * (F.c1 + 2 * F.c2) * p, 2 * (F.c2 + F.c3) * p,
                                2 * (F.c2 + F.c3) * p};
    std::sort(zeta.begin(), zeta.end());
    std::vector<double> got = {pairs[2].eigenvalue.real(), pairs[3].eigenvalue.real(),
                               pairs[4].eigenvalue.real()};
    std::sort(got.begin(), got.end());
    for (int i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(zeta[i]).epsilon(1e-10));
}

TEST_CASE("pair residual decays with separation") {
    double slope = theory::template_pair_exponent(MED);
    CHECK(std::abs(slope + 0.5) <= 0.15);
}

TEST_CASE("focusing templates decay along rays") {
    double slope = theory::focusing_decay_exponent(MED);
    CHECK(std::abs(slope + 0.5) <= 0.1);
}
