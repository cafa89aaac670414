#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hof/labels.hpp"
#include "hof/rational.hpp"

namespace hof {

/// Default threshold separating genuine gaps from numerically closed ones.
inline constexpr double kMinGapWidth = 1e-9;

/// Harper Bloch Hamiltonian at flux p/q on the magnetic Brillouin zone
/// [0, 2pi/q) x [0, 2pi): q x q Hermitian with
///   diagonal      cos(k2 + 2pi * (r*p mod q) / q),   r = 0..q-1
///   off-diagonal  1/2 on the super/sub diagonals
///   corners       (0,q-1) += e^{-i q k1}/2,  (q-1,0) += e^{+i q k1}/2.
/// The hopping 1/2 puts the zero-flux band at exactly [-2, 2]. The phase
/// index is reduced mod q in integers, so phi and phi+1 give bit-identical
/// matrices.
Eigen::MatrixXcd bloch_hamiltonian(const RationalFlux& flux, double k1, double k2);

struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

struct Gap {
    long long j = 0;  // 1..q-1, between bands j and j+1
    double lo = 0.0;
    double hi = 0.0;
    std::optional<GapLabel> label;

    double width() const { return hi - lo; }
};

struct BandStructure {
    RationalFlux flux;
    std::vector<Band> bands;   // q closed intervals, ascending
    std::vector<Gap> gaps;     // q-1 records; closed ones carry no label
};

/// The q bands at flux p/q. The 2q band edges are the sorted union of the
/// eigenvalues at k = (0,0) and k = (pi/q, pi/q) (Chambers relation; the
/// mesh-containment tests back this up). The edge list is antisymmetrized
/// so the E -> -E symmetry of the spectrum holds to the last bit, and the
/// geometry is built from min(p, q-p) after folding, so band_edges(p/q),
/// band_edges((q-p)/q) and band_edges((p+q)/q) are bit-identical.
BandStructure band_edges(const RationalFlux& flux);

/// band_edges plus gap records; gaps wider than min_width get their
/// Diophantine label. Flux 0/1 has a single band and no gap records.
BandStructure labeled_gaps(const RationalFlux& flux, double min_width = kMinGapWidth);

/// Eigenvalues over a uniform n1 x n2 mesh of the magnetic Brillouin zone,
/// ascending per k-point, row-major in (i1, i2). Deterministic and
/// independent of the worker count.
struct SpectrumMesh {
    RationalFlux flux;
    int n1 = 0;
    int n2 = 0;
    std::vector<Eigen::VectorXd> levels;  // size n1*n2, each of length q

    const Eigen::VectorXd& at(int i1, int i2) const { return levels[static_cast<std::size_t>(i1) * n2 + i2]; }
};

SpectrumMesh spectrum_mesh(const RationalFlux& flux, int n1, int n2);

}  // namespace hof
