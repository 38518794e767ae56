#include "catdeco/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "catdeco/field_io.hpp"

namespace catdeco {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) { throw Error("line " + std::to_string(line) + ": " + msg); }

double parse_real(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) fail(line, "not a number: " + s);
        return v;
    } catch (const std::logic_error&) {
        fail(line, "not a number: " + s);
    }
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) fail(line, "not an integer: " + s);
        return v;
    } catch (const std::logic_error&) {
        fail(line, "not an integer: " + s);
    }
}

std::optional<Method> method_from(const std::string& s) {
    if (s == "analytic") return Method::analytic;
    if (s == "ou") return Method::ou;
    if (s == "fd") return Method::fd;
    if (s == "fock") return Method::fock;
    return std::nullopt;
}

// Physical time for a dimensionless delta under the given environment.
double physical_time(const EnvironmentModel& env, double delta) { return delta / (2.0 * env.kappa); }

EnvironmentModel environment_for(const ScenarioConfig& cfg, ModelKind model) {
    switch (model) {
        case ModelKind::standard: return EnvironmentModel::pure_loss(1.0);
        case ModelKind::diffusive: return EnvironmentModel::pure_diffusion(1.0);
        case ModelKind::custom: return {cfg.kappa, cfg.gamma};
    }
    throw Error("unknown model");
}

std::string snapshot_name(ModelKind model, double delta) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_delta_%g", to_string(model).c_str(), delta);
    return buf;
}

}  // namespace

std::string to_string(ModelKind m) {
    switch (m) {
        case ModelKind::standard: return "standard";
        case ModelKind::diffusive: return "diffusive";
        case ModelKind::custom: return "custom";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::analytic: return "analytic";
        case Method::ou: return "ou";
        case Method::fd: return "fd";
        case Method::fock: return "fock";
    }
    return "?";
}

void ScenarioConfig::validate() const {
    if (samples < 32) throw Error("samples must be at least 32");
    if (!(half_width > 0.0)) throw Error("half_width must be positive");
    if (times.empty()) throw Error("times must not be empty");
    for (double t : times) {
        if (!(t >= 0.0)) throw Error("every time delta must be non-negative");
    }
    if (models.empty()) throw Error("no model selected");
    const bool custom = std::find(models.begin(), models.end(), ModelKind::custom) != models.end();
    if (custom && !(kappa > 0.0)) throw Error("custom model needs kappa > 0");
    if (custom && gamma < 0.0) throw Error("custom model needs gamma >= 0");
    if (custom && (method == Method::analytic || cross_check == Method::analytic)) {
        throw Error("no closed form for the custom model; use method ou, fd or fock");
    }
}

ScenarioConfig parse_config(std::istream& is) {
    ScenarioConfig cfg;
    double beta = cfg.state.beta;
    Parity parity = cfg.state.parity;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) fail(line_no, "missing value for '" + key + "'");

        if (key == "beta") {
            beta = parse_real(value, line_no);
            if (!(beta > 0.0)) fail(line_no, "beta must be positive");
        } else if (key == "parity") {
            if (value == "even" || value == "+") parity = Parity::even;
            else if (value == "odd" || value == "-") parity = Parity::odd;
            else fail(line_no, "parity must be even or odd");
        } else if (key == "model") {
            cfg.models.clear();
            for (const auto& m : split_list(value)) {
                if (m == "both") {
                    cfg.models.push_back(ModelKind::diffusive);
                    cfg.models.push_back(ModelKind::standard);
                } else if (m == "standard") {
                    cfg.models.push_back(ModelKind::standard);
                } else if (m == "diffusive") {
                    cfg.models.push_back(ModelKind::diffusive);
                } else if (m == "custom") {
                    cfg.models.push_back(ModelKind::custom);
                } else {
                    fail(line_no, "unknown model '" + m + "'");
                }
            }
        } else if (key == "kappa") {
            cfg.kappa = parse_real(value, line_no);
        } else if (key == "gamma") {
            cfg.gamma = parse_real(value, line_no);
        } else if (key == "method") {
            const auto m = method_from(value);
            if (!m) fail(line_no, "unknown method '" + value + "'");
            cfg.method = *m;
        } else if (key == "cross_check") {
            if (value == "none") {
                cfg.cross_check.reset();
            } else {
                const auto m = method_from(value);
                if (!m) fail(line_no, "unknown method '" + value + "'");
                cfg.cross_check = *m;
            }
        } else if (key == "times") {
            cfg.times.clear();
            for (const auto& t : split_list(value)) {
                const double d = parse_real(t, line_no);
                if (d < 0.0) fail(line_no, "times must be non-negative");
                cfg.times.push_back(d);
            }
        } else if (key == "half_width") {
            cfg.half_width = parse_real(value, line_no);
        } else if (key == "samples") {
            cfg.samples = parse_int(value, line_no);
            if (cfg.samples < 32) fail(line_no, "samples must be at least 32");
        } else if (key == "out_dir") {
            cfg.out_dir = value;
        } else if (key == "formats") {
            cfg.write_csv = cfg.write_ppm = false;
            for (const auto& f : split_list(value)) {
                if (f == "csv") cfg.write_csv = true;
                else if (f == "ppm") cfg.write_ppm = true;
                else fail(line_no, "unknown format '" + f + "'");
            }
        } else if (key == "fd_safety") {
            cfg.fd_safety = parse_real(value, line_no);
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }
    cfg.state = CatState(beta, parity);
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open config " + path.string());
    return parse_config(is);
}

std::vector<RealField> evolve_fields(const ScenarioConfig& cfg, ModelKind model, Method method) {
    cfg.validate();
    const GridSpec g = cfg.grid();
    const CatState& c = cfg.state;
    std::vector<RealField> out;
    out.reserve(cfg.times.size());

    if (method == Method::analytic) {
        for (double delta : cfg.times) {
            if (model == ModelKind::standard) out.push_back(standard_wigner(c, DampingTime(0.5 * delta), g));
            else if (model == ModelKind::diffusive) out.push_back(diffusive_wigner(c, DiffusionTime(delta), g));
            else throw Error("no closed form for the custom model");
        }
        return out;
    }

    const EnvironmentModel env = environment_for(cfg, model);
    if (method == Method::ou) {
        const RealField initial = cat_wigner(c, g);
        for (double delta : cfg.times) out.push_back(ou_propagate(initial, env, physical_time(env, delta)));
        return out;
    }

    // Time-stepping engines need ascending snapshot times.
    std::vector<std::size_t> order(cfg.times.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cfg.times[a] < cfg.times[b]; });
    std::vector<double> sorted;
    for (auto k : order) sorted.push_back(physical_time(env, cfg.times[k]));

    std::vector<RealField> by_time;
    if (method == Method::fd) {
        FDSolverConfig fd;
        fd.safety = cfg.fd_safety;
        fd.t_end = sorted.back();
        fd.snapshots = sorted;
        by_time = fd_evolve(cat_wigner(c, g), env, fd);
    } else {
        // Only the gain term spreads the number distribution; 2 gamma t plays the role of delta.
        const int cutoff = default_cutoff(c, 2.0 * env.gamma * sorted.back());
        const auto states = lindblad_evolve(cat_density_matrix(c, cutoff), env, sorted.back(), sorted);
        for (const auto& r : states) by_time.push_back(wigner_from_rho(r, g));
    }
    out.resize(cfg.times.size());
    for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = std::move(by_time[k]);
    return out;
}

EvolveResult run_evolve(const ScenarioConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);
    EvolveResult result;
    std::ostringstream manifest;

    for (ModelKind model : cfg.models) {
        const auto fields = evolve_fields(cfg, model, cfg.method);
        std::vector<RealField> reference;
        if (cfg.cross_check) reference = evolve_fields(cfg, model, *cfg.cross_check);

        for (std::size_t k = 0; k < fields.size(); ++k) {
            const RealField& f = fields[k];
            SnapshotRecord rec{model, cfg.times[k], {}, {}, integrate(f), f.values.minCoeff(),
                               peak_along_real_axis(f), component_center(f), std::nullopt, f};
            const std::string stem = snapshot_name(model, cfg.times[k]);
            rec.csv = stem + ".csv";
            if (cfg.write_csv) save_real_csv(cfg.out_dir / rec.csv, f);
            if (cfg.write_ppm) {
                rec.ppm = stem + ".ppm";
                write_file_atomic(cfg.out_dir / rec.ppm, render_ppm(f));
            }
            if (cfg.cross_check) rec.cross_max_abs = compare(f, reference[k]).max_abs;

            manifest << "t=" << format_double(rec.delta) << " file=" << rec.csv.string() << " model=" << to_string(model)
                     << " method=" << to_string(cfg.method) << " norm=" << format_double(rec.norm)
                     << " min=" << format_double(rec.min_value) << " peak_x=" << format_double(rec.peak_x)
                     << " center_x=" << format_double(rec.center_x);
            if (!rec.ppm.empty()) manifest << " ppm=" << rec.ppm.string();
            if (rec.cross_max_abs) {
                manifest << " cross_method=" << to_string(*cfg.cross_check)
                         << " cross_max_abs=" << format_double(*rec.cross_max_abs);
            }
            manifest << '\n';
            result.snapshots.push_back(std::move(rec));
        }
    }
    result.manifest = cfg.out_dir / "manifest.txt";
    write_file_atomic(result.manifest, manifest.str());
    return result;
}

std::string visibility_table(const CatState& c, const std::vector<double>& deltas) {
    std::ostringstream os;
    os << "delta,standard_amp,diffusive_amp,period_factor_std,period_factor_diff\n";
    for (double delta : deltas) {
        os << format_double(delta) << ',' << format_double(standard_interference_amplitude(c, DampingTime(0.5 * delta)))
           << ',' << format_double(diffusive_interference_amplitude(c, DiffusionTime(delta))) << ','
           << format_double(fringe_period_factor(BathModel::standard, 0.5 * delta)) << ','
           << format_double(fringe_period_factor(BathModel::diffusive, delta)) << '\n';
    }
    return os.str();
}

double peak_along_real_axis(const RealField& f) {
    const auto& g = f.spec;
    const int row = std::clamp(static_cast<int>(std::lround(-g.y_min / g.dy())), 0, g.ny - 1);
    const auto line = f.values.row(row);
    // Outermost local maximum on x >= 0; the interference bump near the origin can be taller than the component.
    // Merged components leave only the maximum at x = 0.
    const double floor = 1e-6 * line.cwiseAbs().maxCoeff();
    int best = -1;
    for (int i = 0; i < g.nx; ++i) {
        if (g.x(i) < -0.5 * g.dx()) continue;
        const bool left = i == 0 || line[i] >= line[i - 1];
        const bool right = i == g.nx - 1 || line[i] > line[i + 1];
        if (left && right && line[i] > floor) best = i;
    }
    if (best < 0) throw Error("no maximum at x >= 0");
    return g.x(best);
}

double component_center(const RealField& f) {
    const double mass = integrate(f);
    if (mass == 0.0) return 0.0;
    const double m2 = moment(f, 2, 0) / mass;
    const double m4 = moment(f, 4, 0) / mass;
    const double a4 = 0.5 * (3.0 * m2 * m2 - m4);
    return a4 > 0.0 ? std::pow(a4, 0.25) : 0.0;
}

int count_fringes(const RealField& f, double y_range) {
    const auto& g = f.spec;
    const int col = std::clamp(static_cast<int>(std::lround(-g.x_min / g.dx())), 0, g.nx - 1);
    int count = 0;
    for (int j = 1; j < g.ny - 1; ++j) {
        if (std::abs(g.y(j)) > y_range) continue;
        const double v = f.values(j, col);
        if (v > f.values(j - 1, col) && v >= f.values(j + 1, col)) ++count;
    }
    return count;
}

}  // namespace catdeco
