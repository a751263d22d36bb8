#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace elastdort {

struct RunReport {
    std::string output_dir;
    Eigen::VectorXd eigenvalues;           // eig(T) of the weighted operator
    Eigen::VectorXd reported_eigenvalues;  // table-normalized convention
    int significant_count = 0;
    double gap_ratio = 0.0;
    double normality = 0.0;    // noiseless, pre-aperture diagnostics
    double reciprocity = 0.0;
    bool aperture_applied = false;
    std::vector<std::string> image_files;
    std::string eigenvalue_csv;
    std::string operator_file;
    std::string report_file;
    double seconds = 0.0;
};

// Full pipeline: assemble -> noise -> aperture -> eigensystem -> images -> report.
RunReport run_experiment(const ExperimentConfig& cfg);

// Forward stage only: assemble the operator and snapshot it (plus diagnostics).
RunReport run_simulation(const ExperimentConfig& cfg);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Theory measurement suite shared by `verify` and the acceptance tests.
namespace theory {

// log-log slopes of the dominant block eigenvalue vs R for n = 2..5.
std::vector<double> disk_lambda1_slopes(const ElasticMedium& m);
// Slope of |lambda2/lambda1| from the closed-form small-radius expressions.
double formula_ratio_slope(const ElasticMedium& m);
// Slope of the measured |lambda2/lambda1| of the exact Mie blocks (fitted over
// radii where the tiny eigenvalue is numerically resolvable).
double numeric_ratio_slope(const ElasticMedium& m, int n);
// Exponent of the multiple-scattering defect of independent superposition
// (coupled two-disk solve against the sum of single-disk solutions).
double superposition_defect_exponent(const ElasticMedium& m);
// Worst-channel relative error of the leading-order small-cavity far field
// against the boundary-integral solution at scale rho.
double asym_vs_bem_relerr(const ElasticMedium& m, const RadialShape& shape, double rho);
// Largest limit-operator eigen-residual over the five analytic templates of a
// single cavity at the origin.
double template_residual_single(const ElasticMedium& m);
// Fitted decay exponent of the template residual for a cavity pair vs L.
double template_pair_exponent(const ElasticMedium& m);
// Max abs deviation of the closed-form E/H kernels from direct quadrature.
double eh_quadrature_error(const ElasticMedium& m);
// Fitted radial decay exponent of |E| (windowed RMS over oscillations).
double kernel_decay_exponent(const ElasticMedium& m);
// Fitted decay exponent of the Herglotz wave of a focusing template along a
// ray from the cavity center.
double focusing_decay_exponent(const ElasticMedium& m);
// Relative mismatch of the top-5 rescaled operator eigenvalues (BEM, small
// disk) against the theoretical limit-operator eigenvalues.
double limit_vs_bem_top5_mismatch(const ElasticMedium& m, double rho);

} // namespace theory

struct TheoryEntry {
    std::string name;
    double measured;
    std::string expectation;
    bool pass;
};

std::vector<TheoryEntry> verify_theory(const ExperimentConfig& cfg);

} // namespace elastdort
