#pragma once

#include <string>
#include <vector>

#include "gpe/bohmian.hpp"
#include "gpe/grid.hpp"
#include "gpe/states.hpp"

namespace gpe {

/// All CSV output: comma separated, '.' decimal point, 17 significant
/// digits, LF line endings (files are opened in binary mode).

std::string format_double(double v);  // %.17g

void csv_write_matrix(const std::string& path,
                      const std::vector<std::vector<double>>& rows);

void csv_write_column(const std::string& path, const std::string& header,
                      const std::vector<double>& values);

/// Snapshot rows: z_um, re_psi, im_psi, density, phase.
void csv_write_frame(const std::string& path, const Grid& grid,
                     const Wavefunction& psi);

/// Header t_ms, x_1 ... x_M; one row per stored time.
void csv_write_trajectories(const std::string& path, const TrajectorySet& set);

/// Columns z_um, v_trap, v_latt, v_ext.
void csv_write_potential(const std::string& path, const Grid& grid,
                         const std::vector<double>& v_trap,
                         const std::vector<double>& v_latt);

}  // namespace gpe
