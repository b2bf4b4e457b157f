#include "gpe/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gpe {

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

Grid Grid::make(int n_points, double z_min_um, double z_max_um) {
    if (!is_power_of_two(n_points))
        throw std::invalid_argument("grid n_points must be a power of two");
    if (!(z_max_um > z_min_um))
        throw std::invalid_argument("grid requires z_max_um > z_min_um");

    Grid g;
    g.n_points = n_points;
    g.z_min_um = z_min_um;
    g.z_max_um = z_max_um;
    g.dz_um = (z_max_um - z_min_um) / n_points;

    // Anchor the mesh on its midpoint so that symmetric domains get exactly
    // mirror-symmetric floating-point coordinates (and contain z = 0).
    const double mid = 0.5 * (z_min_um + z_max_um);
    g.z.resize(n_points);
    for (int j = 0; j < n_points; ++j)
        g.z[j] = mid + (j - n_points / 2) * g.dz_um;

    const double dk = 2.0 * M_PI / (n_points * g.dz_um);
    g.k.resize(n_points);
    for (int j = 0; j < n_points; ++j) {
        const int jj = (j < n_points / 2) ? j : j - n_points;
        g.k[j] = jj * dk;
    }
    return g;
}

int Grid::index_near(double z_um) const {
    const double x = (z_um - z_min_um) / dz_um;
    int j = static_cast<int>(std::lround(x));
    if (j < 0) j = 0;
    if (j >= n_points) j = n_points - 1;
    return j;
}

}  // namespace gpe
