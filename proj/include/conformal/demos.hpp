#ifndef CONFORMAL_DEMOS_HPP
#define CONFORMAL_DEMOS_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace conformal {

/// Uniform grid of samples; values row-major with x varying fastest.
struct GridField {
    int nx = 0, ny = 0;
    double h = 0;
    double x0 = 0, y0 = 0;
    std::vector<double> values;

    double at(int ix, int iy) const { return values[static_cast<size_t>(iy) * nx + ix]; }
    double& at(int ix, int iy) { return values[static_cast<size_t>(iy) * nx + ix]; }
    std::complex<double> point(int ix, int iy) const { return {x0 + ix * h, y0 + iy * h}; }
};

/// Samples f on a grid.
GridField sample_grid(const std::function<double(std::complex<double>)>& f, int nx, int ny,
                      double h, double x0, double y0);

/// Interior 5-point stencil; the boundary ring is NaN.
/// Throws GridTooSmall below 5x5.
GridField fd_laplacian(const GridField& f);

/// Largest interior |value|, skipping the NaN boundary ring.
double max_interior(const GridField& f);

/// Fractional-linear map z -> (a z + b)/(c z + d).
struct MoebiusMap {
    std::complex<double> a{1}, b{0}, c{0}, d{1};
    std::complex<double> operator()(std::complex<double> z) const { return (a * z + b) / (c * z + d); }
};

/// Samples f((a z + b)/(c z + d)) on the grid. Throws PoleOnGrid when
/// |c z + d| falls under margin anywhere on the grid, and
/// std::invalid_argument on a degenerate map (ad - bc = 0).
GridField moebius_pullback(const MoebiusMap& map,
                           const std::function<double(std::complex<double>)>& f, int nx, int ny,
                           double h, double x0, double y0, double margin = 1e-6);

struct MassRatioResult {
    double predicted_ratio = 0;
    double deviation_percent = 0;
};

/// sqrt(4 pi exp(4 pi)) against the measured proton/electron mass ratio.
MassRatioResult mass_ratio_deviation();

/// CSV dump, header "nx,ny,h" then row-major values.
std::string to_csv(const GridField& f);

} // namespace conformal

#endif
