#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hof/rational.hpp"

namespace hof {

/// Two bands closer than the degeneracy tolerance somewhere on the mesh.
struct DegenerateBandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Plaquette sum does not round cleanly to an integer.
struct MeshTooCoarseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr double kChernResidueError = 1e-3;

struct ChernResult {
    RationalFlux flux;
    std::vector<long long> band_cherns;  // one per band, bottom up
    int n1 = 0;
    int n2 = 0;
    double min_plaquette_gap = 0.0;  // smallest eigenvalue separation seen
};

/// Chern number of one band (1-based, bottom up) from lattice field
/// strengths: plaquette sums of overlap-link phases over an n1 x n2 mesh
/// of the magnetic Brillouin zone. Gauge invariant; integer-exact at
/// modest meshes. Requires the band to be isolated from its neighbors by
/// more than kDegeneracyTol at every mesh point.
long long band_chern(const RationalFlux& flux, int band, int n1, int n2);

/// Hall integer of gap j: the field-strength sum with determinant links
/// over the lowest j bands. Only needs gap j itself open, so it also
/// covers fluxes whose interior bands touch (even q). Equals the partial
/// sum of band Cherns whenever those are individually defined.
long long gap_chern(const RationalFlux& flux, long long j, int n1, int n2);

/// All band Cherns at once (single mesh pass).
ChernResult chern_numbers(const RationalFlux& flux, int n1, int n2);

/// Raw plaquette sums divided by 2*pi, before integer rounding; the
/// residue |sum - round(sum)| measures mesh adequacy.
double band_field_strength(const RationalFlux& flux, int band, int n1, int n2);
double gap_field_strength(const RationalFlux& flux, long long j, int n1, int n2);

}  // namespace hof
