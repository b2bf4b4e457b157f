// Command-line front end: runs scenarios from JSON configs or built-in
// presets, prints oracle tables, and dumps the external potential.

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "gpe/io_csv.hpp"
#include "gpe/linear_oracle.hpp"
#include "gpe/scenario.hpp"

namespace fs = std::filesystem;
using namespace gpe;

namespace {

int run_one(const ScenarioConfig& cfg, const std::string& out_dir,
            bool dump_potential, std::mutex& log_mutex) {
    ScenarioConfig actual = cfg;
    if (dump_potential && !actual.wants("potential"))
        actual.outputs.artifacts.push_back("potential");
    try {
        run_scenario(actual, out_dir);
        std::lock_guard<std::mutex> lock(log_mutex);
        std::cout << actual.name << ": done -> " << out_dir << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(log_mutex);
        std::cerr << actual.name << ": failed: " << e.what() << "\n";
        return 1;
    }
}

int run_presets(const std::vector<std::string>& names, const std::string& out_root,
                int jobs, bool dump_potential) {
    std::vector<ScenarioConfig> configs;
    for (const auto& n : names) configs.push_back(preset_config(n));

    std::mutex log_mutex;
    std::atomic<int> failures{0};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) return;
            const std::string dir = (fs::path(out_root) / configs[i].name).string();
            failures += run_one(configs[i], dir, dump_potential, log_mutex);
        }
    };
    const int n_threads = std::max(1, std::min<int>(jobs, configs.size()));
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return failures.load() ? 1 : 0;
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "," : "") << format_double(row[i]);
        std::cout << "\n";
    }
}

int oracle_table(const std::string& table, double ell, double sigma0, double t_max) {
    PhysicalParams p;
    p.ell_um = ell;
    const ScaledParams s = rescale(p);

    if (table == "params") {
        std::cout << "quantity,value\n";
        const Coupling1D c = derive_coupling(p);
        std::cout << "a_perp_nm," << format_double(c.a_perp_m * 1e9) << "\n";
        std::cout << "g1d_si," << format_double(c.g1d_si) << "\n";
        std::cout << "g1d_bar," << format_double(s.g1d_bar) << "\n";
        std::cout << "m_bar," << format_double(s.m_bar) << "\n";
        std::cout << "omega_z_bar," << format_double(s.omega_z_bar) << "\n";
        for (double l : {5.7, 15.0, 26.0}) {
            PhysicalParams pl = p;
            pl.ell_um = l;
            const double f_eff = effective_frequency(pl);
            const double sig = effective_width(f_eff, pl.mass_kg);
            const double tau = oracle::spread_time(sig, s);
            const double s_quarter = oracle::quarter_period_width(
                2.0 * M_PI * f_eff * 1e-3, s.omega_z_bar, s.m_bar);
            std::printf("f_eff_hz(ell=%g),%s\n", l, format_double(f_eff).c_str());
            std::printf("sigma_eff_um(ell=%g),%s\n", l, format_double(sig).c_str());
            std::printf("tau_ms(ell=%g),%s\n", l, format_double(tau).c_str());
            std::printf("sigma_quarter_um(ell=%g),%s\n", l,
                        format_double(s_quarter).c_str());
        }
        std::cout << "sigma_c_um," << format_double(oracle::coherent_width(s)) << "\n";
        return 0;
    }
    if (table == "fringe") {
        std::vector<std::vector<double>> rows;
        for (double t = 0.5; t <= t_max + 1e-9; t += 0.5)
            rows.push_back({t, oracle::fringe_spacing_exact(t, sigma0, ell, s),
                            oracle::fringe_spacing_asymptotic(t, ell, s)});
        print_table({"t_ms", "dz_exact_um", "dz_asymptotic_um"}, rows);
        return 0;
    }
    if (table == "spread") {
        std::vector<std::vector<double>> rows;
        rows.push_back({0.0, sigma0});
        for (double t = 0.5; t <= t_max + 1e-9; t += 0.5)
            rows.push_back({t, oracle::spread_width(sigma0, t, s)});
        print_table({"t_ms", "sigma_t_um"}, rows);
        return 0;
    }
    std::cerr << "unknown oracle table: " << table
              << " (available: params, fringe, spread)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D Gross-Pitaevskii split-step simulator with Bohmian flux analysis"};
    app.require_subcommand(1);

    // run
    std::string config_path;
    std::string out_dir = "out";
    bool dump_potential = false;
    auto* cmd_run = app.add_subcommand("run", "run a scenario from a JSON config");
    cmd_run->add_option("config", config_path, "scenario config (JSON)")->required();
    cmd_run->add_option("--out", out_dir, "output directory");
    cmd_run->add_flag("--dump-potential", dump_potential,
                      "also write potential.csv (z, V_trap, V_latt, V_ext)");

    // preset
    std::vector<std::string> preset_args;
    std::string preset_out = "out";
    int jobs = 1;
    bool list_presets = false;
    bool print_config = false;
    bool preset_dump_potential = false;
    auto* cmd_preset = app.add_subcommand("preset", "run one or more built-in presets");
    cmd_preset->add_option("names", preset_args, "preset names, or 'all'");
    cmd_preset->add_option("--out", preset_out, "output root directory");
    cmd_preset->add_option("--jobs", jobs, "run presets in parallel");
    cmd_preset->add_flag("--list", list_presets, "list available presets");
    cmd_preset->add_flag("--print-config", print_config,
                         "print the preset config as JSON and exit");
    cmd_preset->add_flag("--dump-potential", preset_dump_potential,
                         "also write potential.csv per preset");

    // oracle
    std::string table;
    double ell = 5.7, sigma0 = 0.4873806;
    double t_max = 5.0;
    auto* cmd_oracle =
        app.add_subcommand("oracle", "print closed-form reference tables (CSV)");
    cmd_oracle->add_option("table", table, "params | fringe | spread")->required();
    cmd_oracle->add_option("--ell", ell, "peak-to-peak distance, um");
    cmd_oracle->add_option("--sigma0", sigma0, "initial width, um");
    cmd_oracle->add_option("--t-max", t_max, "last tabulated time, ms");

    // dump-potential
    std::string pot_out = "potential.csv";
    double pot_ell = 5.7, pot_v0 = 850.0, pot_fz = 50.0;
    auto* cmd_pot = app.add_subcommand(
        "dump-potential", "write the trap + lattice potential as CSV");
    cmd_pot->add_option("--ell", pot_ell, "lattice period, um");
    cmd_pot->add_option("--v0", pot_v0, "barrier height / h, Hz");
    cmd_pot->add_option("--fz", pot_fz, "trap frequency, Hz");
    cmd_pot->add_option("--out", pot_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            const ScenarioConfig cfg = load_config_file(config_path);
            std::mutex log_mutex;
            return run_one(cfg, out_dir, dump_potential, log_mutex);
        }
        if (cmd_preset->parsed()) {
            if (list_presets) {
                for (const auto& n : preset_names()) std::cout << n << "\n";
                return 0;
            }
            std::vector<std::string> names = preset_args;
            if (names.size() == 1 && names[0] == "all") names = preset_names();
            if (names.empty()) {
                std::cerr << "no presets given (try --list)\n";
                return 1;
            }
            if (print_config) {
                for (const auto& n : names) std::cout << config_to_json(preset_config(n));
                return 0;
            }
            return run_presets(names, preset_out, jobs, preset_dump_potential);
        }
        if (cmd_oracle->parsed()) return oracle_table(table, ell, sigma0, t_max);
        if (cmd_pot->parsed()) {
            PhysicalParams p;
            p.ell_um = pot_ell;
            p.v0_over_h_hz = pot_v0;
            p.f_z_hz = pot_fz;
            const Grid grid = Grid::make(1024, -51.2, 51.2);
            const ScaledParams s = rescale(p);
            const PotentialField v_trap = harmonic_trap(grid, s);
            const PotentialField v_latt = lattice(grid, lattice_v0_scaled(p), p.ell_um);
            csv_write_potential(pot_out, grid, v_trap.values, v_latt.values);
            std::cout << "wrote " << pot_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
