#pragma once

#include <vector>

namespace gpe {

/// Uniform periodic spatial mesh together with its conjugate wavenumber mesh
/// in standard FFT ordering (k[0] = 0, positive frequencies first, then the
/// negative ones; k[n/2] takes the negative Nyquist value).
struct Grid {
    int n_points = 0;
    double z_min_um = 0.0;
    double z_max_um = 0.0;
    double dz_um = 0.0;
    std::vector<double> z;  // um
    std::vector<double> k;  // rad/um

    static Grid make(int n_points, double z_min_um, double z_max_um);

    /// Index of the grid point closest to z (clamped to the mesh).
    int index_near(double z_um) const;
};

bool is_power_of_two(int n);

}  // namespace gpe
