#pragma once

#include <string>
#include <vector>

#include "dort.hpp"
#include "medium.hpp"

namespace elastdort {

struct GridSpec {
    double xmin = -15.0, xmax = 15.0;
    double ymin = -15.0, ymax = 15.0;
    double resolution = 0.1;

    int nx() const { return int(std::lround((xmax - xmin) / resolution)) + 1; }
    int ny() const { return int(std::lround((ymax - ymin) / resolution)) + 1; }
    double x(int i) const { return xmin + i * resolution; }
    double y(int j) const { return ymin + j * resolution; }
};

struct FieldMap {
    GridSpec grid;
    std::vector<Vec2c> values;      // row-major: index j * nx + i
    std::vector<double> magnitude;  // |u| per cell

    const Vec2c& at(int i, int j) const { return values[size_t(j) * grid.nx() + i]; }
    double mag(int i, int j) const { return magnitude[size_t(j) * grid.nx() + i]; }
    Vec2 argmax() const;
    // Local maxima (4-neighborhood) with magnitude >= frac * global max.
    std::vector<Vec2> local_maxima(double frac) const;
};

FieldMap herglotz_image(const ElasticMedium& m, const HerglotzKernel& kernel, const GridSpec& grid);

void write_field_map_csv(const FieldMap& map, const std::string& path);
void write_field_map_pgm(const FieldMap& map, const std::string& path);
void write_eigenvalues_csv(const Eigen::VectorXd& eigs, const std::string& path);
void write_operator_binary(const FarFieldMatrix& F, const std::string& path);
FarFieldMatrix read_operator_binary(const ElasticMedium& m, const std::string& path);

} // namespace elastdort
