#include "conformal/demos.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "conformal/errors.hpp"

namespace conformal {

// CODATA 2018 recommended value of m_p/m_e.
static constexpr double kProtonElectronMassRatio = 1836.15267343;

GridField sample_grid(const std::function<double(std::complex<double>)>& f, int nx, int ny,
                      double h, double x0, double y0) {
    GridField g;
    g.nx = nx;
    g.ny = ny;
    g.h = h;
    g.x0 = x0;
    g.y0 = y0;
    g.values.resize(static_cast<size_t>(nx) * ny);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) g.at(ix, iy) = f(g.point(ix, iy));
    return g;
}

GridField fd_laplacian(const GridField& f) {
    if (f.nx < 5 || f.ny < 5)
        throw GridTooSmall("5-point stencil needs at least a 5x5 grid, got " +
                           std::to_string(f.nx) + "x" + std::to_string(f.ny));
    GridField out = f;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double h2 = f.h * f.h;
    for (int iy = 0; iy < f.ny; ++iy)
        for (int ix = 0; ix < f.nx; ++ix) {
            if (ix == 0 || iy == 0 || ix == f.nx - 1 || iy == f.ny - 1) {
                out.at(ix, iy) = nan;
                continue;
            }
            out.at(ix, iy) = (f.at(ix + 1, iy) + f.at(ix - 1, iy) + f.at(ix, iy + 1) +
                              f.at(ix, iy - 1) - 4 * f.at(ix, iy)) /
                             h2;
        }
    return out;
}

double max_interior(const GridField& f) {
    double v = 0;
    for (int iy = 1; iy + 1 < f.ny; ++iy)
        for (int ix = 1; ix + 1 < f.nx; ++ix) v = std::max(v, std::abs(f.at(ix, iy)));
    return v;
}

GridField moebius_pullback(const MoebiusMap& map,
                           const std::function<double(std::complex<double>)>& f, int nx, int ny,
                           double h, double x0, double y0, double margin) {
    if (std::abs(map.a * map.d - map.b * map.c) == 0)
        throw std::invalid_argument("degenerate map: ad - bc = 0");
    return sample_grid(
        [&](std::complex<double> z) {
            if (std::abs(map.c * z + map.d) < margin)
                throw PoleOnGrid("map pole within margin of grid point (" +
                                 std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")");
            return f(map(z));
        },
        nx, ny, h, x0, y0);
}

MassRatioResult mass_ratio_deviation() {
    MassRatioResult r;
    const double four_pi = 4 * M_PI;
    r.predicted_ratio = std::sqrt(four_pi * std::exp(four_pi));
    r.deviation_percent =
        100 * (r.predicted_ratio - kProtonElectronMassRatio) / kProtonElectronMassRatio;
    return r;
}

std::string to_csv(const GridField& f) {
    std::ostringstream out;
    out << "nx,ny,h\n" << f.nx << "," << f.ny << "," << f.h << "\n";
    for (int iy = 0; iy < f.ny; ++iy) {
        for (int ix = 0; ix < f.nx; ++ix) {
            if (ix) out << ",";
            out << f.at(ix, iy);
        }
        out << "\n";
    }
    return out.str();
}

} // namespace conformal
