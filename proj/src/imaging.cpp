#include "imaging.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>

namespace elastdort {

Vec2 FieldMap::argmax() const {
    size_t best = 0;
    for (size_t k = 1; k < magnitude.size(); ++k)
        if (magnitude[k] > magnitude[best]) best = k;
    int i = int(best % grid.nx());
    int j = int(best / grid.nx());
    return Vec2(grid.x(i), grid.y(j));
}

std::vector<Vec2> FieldMap::local_maxima(double frac) const {
    std::vector<Vec2> out;
    double peak = 0.0;
    for (double v : magnitude) peak = std::max(peak, v);
    const int nx = grid.nx(), ny = grid.ny();
    for (int j = 1; j < ny - 1; ++j)
        for (int i = 1; i < nx - 1; ++i) {
            double v = mag(i, j);
            if (v < frac * peak) continue;
            if (v >= mag(i - 1, j) && v >= mag(i + 1, j) && v >= mag(i, j - 1) &&
                v >= mag(i, j + 1))
                out.push_back(Vec2(grid.x(i), grid.y(j)));
        }
    return out;
}

FieldMap herglotz_image(const ElasticMedium& m, const HerglotzKernel& f, const GridSpec& grid) {
    FieldMap map;
    map.grid = grid;
    const int nx = grid.nx(), ny = grid.ny(), nd = f.size();
    map.values.assign(size_t(nx) * ny, Vec2c::Zero());
    map.magnitude.assign(size_t(nx) * ny, 0.0);

    // e^{i k a.x} factorizes over grid coordinates; tabulate per direction.
    const cd pref = std::exp(cd(0.0, -M_PI / 4.0));
    const double sp = std::sqrt(m.kappa_p / m.omega);
    const double ss = std::sqrt(m.kappa_s / m.omega);
    std::vector<cd> expx(size_t(nd) * nx), expy(size_t(nd) * ny);
    for (int pass = 0; pass < 2; ++pass) {
        double kap = pass == 0 ? m.kappa_p : m.kappa_s;
        for (int k = 0; k < nd; ++k) {
            const Vec2& a = f.directions[k];
            for (int i = 0; i < nx; ++i)
                expx[size_t(k) * nx + i] = std::exp(cd(0.0, kap * a.x() * grid.x(i)));
            for (int j = 0; j < ny; ++j)
                expy[size_t(k) * ny + j] = std::exp(cd(0.0, kap * a.y() * grid.y(j)));
        }
        for (int k = 0; k < nd; ++k) {
            const Vec2& a = f.directions[k];
            Vec2 pol = pass == 0 ? a : perp(a);
            cd amp = pass == 0 ? f.weights[k] * sp * f.fp[k] : f.weights[k] * ss * f.fs[k];
            if (amp == cd(0.0)) continue;
            Vec2c vec = amp * pol.cast<cd>();
            const cd* ex = &expx[size_t(k) * nx];
            const cd* ey = &expy[size_t(k) * ny];
            for (int j = 0; j < ny; ++j) {
                cd eyj = ey[j];
                Vec2c* row = &map.values[size_t(j) * nx];
                for (int i = 0; i < nx; ++i) row[i] += vec * (ex[i] * eyj);
            }
        }
    }
    for (size_t c = 0; c < map.values.size(); ++c) {
        map.values[c] *= pref;
        map.magnitude[c] = map.values[c].norm();
    }
    return map;
}

void write_field_map_csv(const FieldMap& map, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(17);
    out << "x,y,mag,re_u1,im_u1,re_u2,im_u2\n";
    for (int j = 0; j < map.grid.ny(); ++j)
        for (int i = 0; i < map.grid.nx(); ++i) {
            const Vec2c& u = map.at(i, j);
            out << map.grid.x(i) << ',' << map.grid.y(j) << ',' << map.mag(i, j) << ','
                << u.x().real() << ',' << u.x().imag() << ',' << u.y().real() << ','
                << u.y().imag() << '\n';
        }
}

void write_field_map_pgm(const FieldMap& map, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    double peak = 0.0;
    for (double v : map.magnitude) peak = std::max(peak, v);
    const int nx = map.grid.nx(), ny = map.grid.ny();
    out << "P5\n" << nx << ' ' << ny << "\n255\n";
    for (int j = ny - 1; j >= 0; --j)
        for (int i = 0; i < nx; ++i) {
            double v = peak > 0.0 ? map.mag(i, j) / peak : 0.0;
            out.put(char(std::lround(255.0 * v)));
        }
}

void write_eigenvalues_csv(const Eigen::VectorXd& eigs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(17);
    out << "index,value\n";
    for (Eigen::Index i = 0; i < eigs.size(); ++i) out << (i + 1) << ',' << eigs[i] << '\n';
}

namespace {
constexpr char kMagic[4] = {'E', 'D', 'O', 'P'};
}

void write_operator_binary(const FarFieldMatrix& F, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(kMagic, 4);
    std::uint32_t nd = std::uint32_t(F.n_dir());
    std::uint32_t tag = 0;  // channel order [p;s]
    std::uint32_t ngrid = std::uint32_t(F.n_grid);
    out.write(reinterpret_cast<const char*>(&nd), 4);
    out.write(reinterpret_cast<const char*>(&tag), 4);
    out.write(reinterpret_cast<const char*>(&ngrid), 4);
    // column-major complex doubles, little-endian host order
    out.write(reinterpret_cast<const char*>(F.matrix.data()),
              std::streamsize(sizeof(cd)) * F.matrix.size());
    for (int j = 0; j < F.n_dir(); ++j) {
        double th = std::atan2(F.directions[j].y(), F.directions[j].x());
        out.write(reinterpret_cast<const char*>(&th), 8);
    }
}

FarFieldMatrix read_operator_binary(const ElasticMedium& m, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != std::string(kMagic, 4))
        throw std::runtime_error("bad operator file: " + path);
    std::uint32_t nd = 0, tag = 0, ngrid = 0;
    in.read(reinterpret_cast<char*>(&nd), 4);
    in.read(reinterpret_cast<char*>(&tag), 4);
    in.read(reinterpret_cast<char*>(&ngrid), 4);
    if (tag != 0) throw std::runtime_error("unsupported channel order tag");
    FarFieldMatrix F;
    F.medium = m;
    F.n_grid = int(ngrid);
    F.matrix.resize(2 * nd, 2 * nd);
    in.read(reinterpret_cast<char*>(F.matrix.data()), std::streamsize(sizeof(cd)) * F.matrix.size());
    F.directions.resize(nd);
    F.dir_weights = Eigen::VectorXd::Constant(nd, 2.0 * M_PI / ngrid);
    for (std::uint32_t j = 0; j < nd; ++j) {
        double th;
        in.read(reinterpret_cast<char*>(&th), 8);
        F.directions[j] = Vec2(std::cos(th), std::sin(th));
    }
    if (!in) throw std::runtime_error("truncated operator file: " + path);
    return F;
}

} // namespace elastdort
