#pragma once

#include <Eigen/Dense>

#include "catdeco/phase_space.hpp"

namespace catdeco {

enum class Parity { even, odd };

inline double parity_sign(Parity p) { return p == Parity::even ? 1.0 : -1.0; }

/// N_pm (|beta> +- |-beta>) with real beta > 0.
struct CatState {
    double beta = 1.0;
    Parity parity = Parity::even;

    CatState() = default;
    CatState(double beta_, Parity parity_);
};

/// Truncated number-basis density operator, indices 0..cutoff.
struct FockDensityMatrix {
    int cutoff = 0;
    Eigen::MatrixXcd rho;

    FockDensityMatrix() = default;
    explicit FockDensityMatrix(Eigen::MatrixXcd r);

    int dim() const { return cutoff + 1; }
    double trace() const { return rho.trace().real(); }
    double mean_photon() const;
    double hermiticity_error() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }
    // Population of the `levels` highest number states.
    double top_population(int levels) const;

    static FockDensityMatrix vacuum(int cutoff);
    static FockDensityMatrix number_state(int n, int cutoff);
    static FockDensityMatrix maximally_mixed(int cutoff);
    static FockDensityMatrix pure(const Eigen::VectorXcd& psi);
};

/// N_pm^2 = 1 / (2 (1 +- exp(-2 beta^2))).
double cat_normalization(const CatState& c);

/// Error("grid underresolves fringes") when cos(wavenumber * y) gets fewer than
/// 8 samples per period along y.
void check_fringe_resolution(const GridSpec& g, double wavenumber);

struct SampleOptions {
    bool check_fringes = true;
};

/// Cat-state Wigner function, two Gaussians at +-beta and an interference
/// term 2 exp(-2|alpha|^2) cos(4 beta y) with the parity's sign.
RealField cat_wigner(const CatState& c, const GridSpec& g, SampleOptions opt = {});

/// (2/pi) exp(-2|alpha|^2).
RealField vacuum_wigner(const GridSpec& g);

/// (2/pi) exp(-2|alpha - alpha0|^2), the coherent state |alpha0>.
RealField coherent_wigner(cplx alpha0, const GridSpec& g);

/// ceil(beta^2 + 6 beta + 10 + 2 delta_max), raised until the top five levels of the
/// cat carry less than 1e-12 population. With delta_max > 0 it is raised further until
/// the population the cat would have above cutoff - 2 after diffusing for delta_max
/// stays below 1e-10.
int default_cutoff(const CatState& c, double delta_max = 0.0);

/**
 * Number-basis amplitudes of the cat, normalized after truncation.
 * Throws Error("cutoff too small") when the population beyond `cutoff`
 * exceeds 1e-12.
 */
Eigen::VectorXcd cat_fock_vector(const CatState& c, int cutoff);

/// Coherent state amplitudes exp(-|a|^2/2) a^n / sqrt(n!), not renormalized.
Eigen::VectorXcd coherent_fock_vector(cplx amplitude, int cutoff);

/// |psi><psi| of cat_fock_vector; also requires the top five levels to hold
/// less than 1e-12 population, else Error("cutoff too small").
FockDensityMatrix cat_density_matrix(const CatState& c, int cutoff);

}  // namespace catdeco
