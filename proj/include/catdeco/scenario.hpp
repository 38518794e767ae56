#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catdeco/evolution_analytic.hpp"
#include "catdeco/evolution_numeric.hpp"

namespace catdeco {

enum class ModelKind { standard, diffusive, custom };
enum class Method { analytic, ou, fd, fock };

std::string to_string(ModelKind m);
std::string to_string(Method m);

/**
 * One CLI run. Times are dimensionless delta = 2 kappa t for every model; the
 * standard model therefore runs to kt = delta / 2. The default reproduces the
 * Fig. 1 layout: even cat, beta = 3, both models, delta in {0, 0.1, 0.5, 4}.
 */
struct ScenarioConfig {
    CatState state{3.0, Parity::even};
    std::vector<ModelKind> models{ModelKind::diffusive, ModelKind::standard};
    double kappa = 1.0;  // custom model only
    double gamma = 0.0;  // custom model only
    Method method = Method::analytic;
    std::vector<double> times{0.0, 0.1, 0.5, 4.0};
    double half_width = 11.0;
    int samples = 401;
    std::filesystem::path out_dir = "out";
    bool write_csv = true;
    bool write_ppm = true;
    std::optional<Method> cross_check;
    double fd_safety = 0.8;

    GridSpec grid() const { return GridSpec::square(half_width, samples); }
    void validate() const;
};

/// Flat "key = value" text, '#' comments, comma-separated lists.
/// Parse failures raise Error("line N: ...").
ScenarioConfig parse_config(std::istream& is);
ScenarioConfig load_config(const std::filesystem::path& path);

struct SnapshotRecord {
    ModelKind model;
    double delta;
    std::filesystem::path csv;
    std::filesystem::path ppm;  // empty when not written
    double norm;
    double min_value;
    double peak_x;    // outermost local maximum along y = 0, x >= 0
    double center_x;  // component center from marginal moments
    std::optional<double> cross_max_abs;
    RealField field;
};

struct EvolveResult {
    std::vector<SnapshotRecord> snapshots;
    std::filesystem::path manifest;
};

/// Evolves the configured cat through every (model, time) pair, writes one grid
/// per pair plus an optional heatmap, then the manifest (written last).
EvolveResult run_evolve(const ScenarioConfig& cfg);

/// Evolves without touching the filesystem.
std::vector<RealField> evolve_fields(const ScenarioConfig& cfg, ModelKind model, Method method);

/// Rows "delta,standard_amp,diffusive_amp,period_factor_std,period_factor_diff".
std::string visibility_table(const CatState& c, const std::vector<double>& deltas);

/// Outermost local maximum of the row nearest y = 0 over x >= 0.
double peak_along_real_axis(const RealField& f);

/**
 * Center a of a symmetric two-Gaussian mixture at +-a with common width,
 * recovered from the x-marginal moments: 2 a^4 = 3 <x^2>^2 - <x^4>.
 * Unlike the argmax it stays meaningful once the components overlap.
 */
double component_center(const RealField& f);

/// Local maxima of the column nearest x = 0 with |y| <= y_range.
int count_fringes(const RealField& f, double y_range = 1.0);

}  // namespace catdeco
