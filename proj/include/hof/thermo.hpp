#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hof/spectrum.hpp"

namespace hof {

/// mu is not inside the same open labeled gap across the fluxes involved.
struct GapNotTrackedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Natural units: e = hbar = 1, unit cell area 1, so B = 2*pi*(p/q) and
/// the conductance quantum is 1/(2*pi). Hall integers are reported as
/// multiples of that quantum.
inline constexpr double kFluxToB = 2.0 * 3.14159265358979323846;

/// T=0 grand-canonical pressure per unit cell,
///   P(mu) = (1/q) * <sum_b (mu - E_b(k))_+>_MBZ,
/// by exact quadrature on a uniform n1 x n2 mesh.
double pressure(double mu, const RationalFlux& flux, int n1, int n2);
double pressure_from_mesh(const SpectrumMesh& mesh, double mu);

/// Integrated density of states: (1/q) * <#{b : E_b(k) < mu}>_MBZ.
/// Equals dP/dmu, and j/q exactly inside gap j.
double density(double mu, const RationalFlux& flux, int n1, int n2);
double density_from_mesh(const SpectrumMesh& mesh, double mu);

/// The exact gap density j/q as a reduced fraction.
RationalFlux gap_density(const RationalFlux& flux, long long j);

/// Where a chemical potential sits relative to a band structure.
enum class MuRegion { Below, Band, Gap, Above };

struct MuLocation {
    MuRegion region = MuRegion::Below;
    long long index = 0;              // band (1..q) or gap (1..q-1) index
    std::optional<GapLabel> label;    // set for open labeled gaps
};

MuLocation locate_mu(const BandStructure& bs, double mu);

/// Streda slope round(d rho / d(flux)) across two fluxes whose open gaps
/// at mu carry the same label pair; exact rational arithmetic, the result
/// is the shared Hall integer k. Throws GapNotTrackedError otherwise.
long long streda_sigma(double mu, const RationalFlux& flux, const RationalFlux& neighbor);

/// dP/dB at fixed mu by central differences over flux values snapped to
/// rationals with denominator <= den_cap. Requires mu to stay in the same
/// labeled gap (or outside the spectrum on the same side) across the
/// stencil; throws GapNotTrackedError otherwise.
double magnetization(double mu, const RationalFlux& flux, double delta_flux, long long den_cap,
                     int n1, int n2);

struct ThermoSample {
    double mu = 0.0;
    RationalFlux flux;
    double pressure = 0.0;
    double density = 0.0;
    double magnetization = 0.0;  // NaN when no gap is tracked
    double sigma_hall = 0.0;     // Hall integer (units of 1/2pi); NaN off-gap
};

/// Samples over a uniform mu grid at fixed flux. Magnetization uses a
/// stencil of half-width delta_flux; sigma the Streda pairing against the
/// stencil fluxes. Untracked entries are NaN.
std::vector<ThermoSample> thermo_samples(const RationalFlux& flux, double mu_lo, double mu_hi,
                                         int steps, int n1, int n2, double delta_flux = 1.0 / 64.0,
                                         long long den_cap = 64);

/// Max residuals of the pressure identities P(mu,phi) = P(mu,-phi)
/// = P(mu,phi+1) and P(mu,phi) = mu + P(-mu,phi) over a mu grid,
/// at matched meshes.
struct SymmetryReport {
    double max_flux_flip = 0.0;
    double max_flux_period = 0.0;
    double max_particle_hole = 0.0;

    double worst() const;
};

SymmetryReport check_symmetries(const std::vector<double>& mu_grid,
                                const std::vector<RationalFlux>& fluxes, int n1, int n2);

/// Tight-binding <-> split-Landau-level duality checks at Landau flux
/// p/q, whose spectral problem is the Harper model at q/p and whose
/// pressure is P_l(mu, p/q) = (p/q) P_b(mu, q/p):
///   (a) the Hall integer read from Streda on P_l across a Farey
///       neighbor equals n of the swapped Diophantine labeling, and
///   (b) 2pi*sigma_l = rho_b - (p/q) * 2pi*sigma_b holds as an exact
///       integer identity (j - k*p)/q = n in every open gap, including
///       the full-level limit rho_b = 1, sigma_b = 0 -> sigma_l = 1/2pi.
struct DualityReport {
    RationalFlux landau_flux;
    long long conductance_identities = 0;  // gaps passing (b)
    long long streda_pairs = 0;            // neighbor pairs passing (a)
    bool all_exact = true;
};

DualityReport check_duality(long long p, long long q, int n1, int n2);

/// Classification of an H(B) interval by the sign of the increment.
enum class HInterval { Invertible, CoexistenceCandidate };

std::vector<HInterval> classify_h_intervals(const std::vector<double>& h);

/// Exploratory scan of H = B - 4*pi*M over a B window at fixed mu.
/// M comes from pressure differences between neighboring snapped fluxes;
/// no claim is made about the true mu-H diagram.
struct HScan {
    double mu = 0.0;
    std::vector<double> b;
    std::vector<RationalFlux> fluxes;
    std::vector<double> m;
    std::vector<double> h;
    std::vector<HInterval> intervals;
};

HScan h_field_scan(double mu, double b_lo, double b_hi, int steps, long long den_cap, int n1,
                   int n2);

}  // namespace hof
