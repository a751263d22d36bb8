#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "asymptotic.hpp"
#include "boundary.hpp"
#include "medium.hpp"
#include "mie.hpp"

namespace elastdort {

enum class Engine { mie, bem, asymptotic };

struct Cavity {
    RadialShape shape;
    Vec2 center;
    double scale;

    bool is_disk() const { return shape.ac.empty() && shape.bs.empty(); }
    double disk_radius() const { return scale * shape.c0; }
};

using CavitySet = std::vector<Cavity>;

// Area enclosed by r(t) at unit scale: pi (c0^2 + 1/2 sum (ac^2 + bs^2)).
double unit_area(const RadialShape& shape);

struct AssembleOptions {
    int n_boundary_points = 128;
};

// Discrete far-field operator on a direction grid. Rows/columns are ordered
// [p-block; s-block]; column k carries the quadrature weight and the
// e^{-i pi/4} sqrt(kappa_in/omega) kernel factors, so eigenvalues of `matrix`
// approximate those of the continuous operator F.
struct FarFieldMatrix {
    ElasticMedium medium;
    int n_grid = 0;                  // size of the original full grid
    std::vector<Vec2> directions;    // retained directions
    Eigen::VectorXd dir_weights;     // per-direction quadrature weight (2 pi / n_grid)
    Eigen::MatrixXcd matrix;         // 2 n_dir x 2 n_dir

    int n_dir() const { return static_cast<int>(directions.size()); }
    // Inner-product weights per row: w_j * omega/kappa_p (p rows), then
    // w_j * omega/kappa_s (s rows).
    Eigen::VectorXd weight_vector() const;
};

FarFieldMatrix assemble_operator(Engine engine, const ElasticMedium& m, const CavitySet& cavities,
                                 int n_directions, const AssembleOptions& opt = {});

// Entrywise complex Gaussian perturbation, std = level * ||F||_F / dim,
// deterministic under seed.
FarFieldMatrix add_noise(const FarFieldMatrix& F, double level, std::uint64_t seed);

// Restrict emission and reception to directions inside the union of arcs
// [a, b) (radians, half-open; b < a wraps through zero).
using ApertureArcs = std::vector<std::pair<double, double>>;
FarFieldMatrix apply_aperture(const FarFieldMatrix& F, const ApertureArcs& arcs);

struct TimeReversalEigenSystem {
    Eigen::VectorXd eigenvalues;                // nonincreasing, >= 0
    std::vector<HerglotzKernel> eigenvectors;   // orthonormal in the weighted product
    int significant_count = 0;
    double gap_ratio = 0.0;
};

// m_guess > 0 bounds the gap search to the first 6*m_guess eigenvalues (a
// cavity-count guess); 0 leaves it unconstrained.
TimeReversalEigenSystem eigensystem(const FarFieldMatrix& F, int m_guess = 0);

// Largest consecutive-ratio gap of a nonincreasing positive spectrum among
// k <= min(6*m_guess, len-1) (unconstrained when m_guess = 0); ties broken
// toward the smallest index. Under measurement noise the unconstrained rule
// can lock onto the collapsing bottom edge of the noise spectrum, which is
// what the bound is for.
std::pair<int, double> significance_gap(const Eigen::VectorXd& sorted_eigs, int m_guess = 0);

// Scaling that maps eigenvalues of the discrete T to the reference reported
// convention: multiply |lambda(F)| by n_grid^2/(8 pi^2), i.e. eig(T) by its
// square.
double table_normalization(const FarFieldMatrix& F);

// Diagnostics.
double normality_residual(const FarFieldMatrix& F);
double reciprocity_residual(const FarFieldMatrix& F);  // full grid only
Eigen::VectorXcd f_eigenvalues(const FarFieldMatrix& F);

// Unit-scale area and polarization tensor of each cavity shape, for the
// asymptotic engine and the theory checks.
std::vector<SmallCavityDescriptor> cavity_descriptors(const ElasticMedium& m,
                                                      const CavitySet& cavities,
                                                      int n_boundary_points = 256);

} // namespace elastdort
