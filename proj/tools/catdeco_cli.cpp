// catdeco: command-line front end for the cat-state decoherence engines.
//
//   catdeco evolve     [--config FILE] [--out DIR]
//   catdeco visibility [--config FILE] [--out DIR]
//   catdeco compare A.csv B.csv [--tol X]
//   catdeco render GRID.csv OUT.ppm
//
// Exit codes: 0 success / within tolerance, 1 tolerance exceeded, 2 usage, format or engine error.

#include <iostream>

#include <CLI11.hpp>

#include "catdeco/field_io.hpp"
#include "catdeco/scenario.hpp"

namespace {

constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;

catdeco::ScenarioConfig resolve_config(const std::string& config_path, const std::string& out_dir) {
    catdeco::ScenarioConfig cfg = config_path.empty() ? catdeco::ScenarioConfig{} : catdeco::load_config(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    return cfg;
}

int cmd_evolve(const catdeco::ScenarioConfig& cfg) {
    const auto result = catdeco::run_evolve(cfg);
    for (const auto& s : result.snapshots) {
        std::cout << catdeco::to_string(s.model) << " delta=" << catdeco::format_double(s.delta)
                  << " norm=" << catdeco::format_double(s.norm) << " min=" << catdeco::format_double(s.min_value)
                  << " peak_x=" << catdeco::format_double(s.peak_x);
        if (s.cross_max_abs) std::cout << " cross_max_abs=" << catdeco::format_double(*s.cross_max_abs);
        std::cout << '\n';
    }
    std::cout << "manifest: " << result.manifest.string() << '\n';
    return 0;
}

int cmd_visibility(const catdeco::ScenarioConfig& cfg) {
    const std::string table = catdeco::visibility_table(cfg.state, cfg.times);
    std::filesystem::create_directories(cfg.out_dir);
    catdeco::write_file_atomic(cfg.out_dir / "visibility.csv", table);
    std::cout << table;
    return 0;
}

int cmd_compare(const std::string& a, const std::string& b, double tol) {
    const auto fa = catdeco::load_real_csv(a);
    const auto fb = catdeco::load_real_csv(b);
    const auto r = catdeco::compare(fa, fb);
    std::cout << "max_abs=" << catdeco::format_double(r.max_abs) << " l2=" << catdeco::format_double(r.l2)
              << " x=" << catdeco::format_double(r.x_at_max) << " y=" << catdeco::format_double(r.y_at_max) << '\n';
    return r.max_abs <= tol ? 0 : kExitTolerance;
}

int cmd_render(const std::string& grid, const std::string& out) {
    catdeco::write_file_atomic(out, catdeco::render_ppm(catdeco::load_real_csv(grid)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schroedinger-cat Wigner function evolution under loss and gain-compensated baths"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir;
    double tol = 1e-6;
    app.add_option("--config", config_path, "Scenario file (key = value)")->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (overrides out_dir)");
    app.add_option("--tol", tol, "Tolerance for compare")->check(CLI::NonNegativeNumber);

    auto* evolve = app.add_subcommand("evolve", "Evolve the cat and write grids, heatmaps and a manifest");
    auto* visibility = app.add_subcommand("visibility", "Tabulate fringe amplitude and period factors");
    auto* comparison = app.add_subcommand("compare", "Compare two grid files");
    std::string file_a, file_b;
    comparison->add_option("a", file_a)->required();
    comparison->add_option("b", file_b)->required();
    auto* render = app.add_subcommand("render", "Render a grid file as a P6 heatmap");
    std::string grid_file, ppm_file;
    render->add_option("grid", grid_file)->required();
    render->add_option("out", ppm_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*evolve) return cmd_evolve(resolve_config(config_path, out_dir));
        if (*visibility) return cmd_visibility(resolve_config(config_path, out_dir));
        if (*comparison) return cmd_compare(file_a, file_b, tol);
        if (*render) return cmd_render(grid_file, ppm_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
