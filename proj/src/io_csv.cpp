#include "gpe/io_csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gpe {

namespace {

std::ofstream open_binary(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void csv_write_matrix(const std::string& path,
                      const std::vector<std::vector<double>>& rows) {
    std::ofstream f = open_binary(path);
    std::string line;
    for (const auto& row : rows) {
        line.clear();
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) line += ',';
            line += format_double(row[j]);
        }
        line += '\n';
        f << line;
    }
}

void csv_write_column(const std::string& path, const std::string& header,
                      const std::vector<double>& values) {
    std::ofstream f = open_binary(path);
    if (!header.empty()) f << header << '\n';
    for (double v : values) f << format_double(v) << '\n';
}

void csv_write_frame(const std::string& path, const Grid& grid,
                     const Wavefunction& psi) {
    std::ofstream f = open_binary(path);
    f << "z_um,re_psi,im_psi,density,phase\n";
    const PhaseProfile ph = phase(psi);
    for (int j = 0; j < grid.n_points; ++j) {
        f << format_double(grid.z[j]) << ',' << format_double(psi.amp[j].real())
          << ',' << format_double(psi.amp[j].imag()) << ','
          << format_double(std::norm(psi.amp[j])) << ','
          << format_double(ph.theta[j]) << '\n';
    }
}

void csv_write_trajectories(const std::string& path, const TrajectorySet& set) {
    std::ofstream f = open_binary(path);
    const std::size_t m = set.positions.empty() ? 0 : set.positions[0].size();
    f << "t_ms";
    for (std::size_t t = 1; t <= m; ++t) f << ",x_" << t;
    f << '\n';
    for (std::size_t i = 0; i < set.times.size(); ++i) {
        f << format_double(set.times[i]);
        for (std::size_t t = 0; t < m; ++t)
            f << ',' << format_double(set.positions[i][t]);
        f << '\n';
    }
}

void csv_write_potential(const std::string& path, const Grid& grid,
                         const std::vector<double>& v_trap,
                         const std::vector<double>& v_latt) {
    std::ofstream f = open_binary(path);
    f << "z_um,v_trap,v_latt,v_ext\n";
    for (int j = 0; j < grid.n_points; ++j) {
        f << format_double(grid.z[j]) << ',' << format_double(v_trap[j]) << ','
          << format_double(v_latt[j]) << ','
          << format_double(v_trap[j] + v_latt[j]) << '\n';
    }
}

}  // namespace gpe
