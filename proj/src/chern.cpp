#include "hof/chern.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "hof/parallel.hpp"
#include "hof/spectrum.hpp"

namespace hof {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct MeshEigensystem {
    RationalFlux flux;
    int n1, n2;
    std::vector<Eigen::VectorXd> values;
    std::vector<Eigen::MatrixXcd> vectors;

    std::size_t idx(int i1, int i2) const {
        return static_cast<std::size_t>((i1 % n1 + n1) % n1) * n2 + (i2 % n2 + n2) % n2;
    }
};

MeshEigensystem solve_mesh(const RationalFlux& flux, int n1, int n2) {
    if (n1 < 2 || n2 < 2) throw std::domain_error("chern: mesh must be at least 2x2");
    MeshEigensystem m{fold_unit(flux), n1, n2, {}, {}};
    std::size_t total = static_cast<std::size_t>(n1) * n2;
    m.values.resize(total);
    m.vectors.resize(total);
    double q = static_cast<double>(m.flux.q);
    parallel_for(total, [&](std::size_t idx) {
        int i1 = static_cast<int>(idx) / n2;
        int i2 = static_cast<int>(idx) % n2;
        double k1 = kTwoPi / q * (static_cast<double>(i1) / n1);
        double k2 = kTwoPi * (static_cast<double>(i2) / n2);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(bloch_hamiltonian(m.flux, k1, k2));
        m.values[idx] = solver.eigenvalues();
        m.vectors[idx] = solver.eigenvectors();
    });
    return m;
}

// Smallest separation between level `band` (0-based) and its neighbors,
// minimized over the mesh; named k-point of the minimum via *where.
double min_separation(const MeshEigensystem& m, int band, std::size_t* where) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        const auto& ev = m.values[i];
        if (band > 0) {
            double d = ev[band] - ev[band - 1];
            if (d < best) { best = d; *where = i; }
        }
        if (band + 1 < ev.size()) {
            double d = ev[band + 1] - ev[band];
            if (d < best) { best = d; *where = i; }
        }
    }
    return best;
}

std::string kpoint_name(const MeshEigensystem& m, std::size_t idx) {
    int i1 = static_cast<int>(idx) / m.n2;
    int i2 = static_cast<int>(idx) % m.n2;
    return "(i1=" + std::to_string(i1) + ", i2=" + std::to_string(i2) + ") of " +
           std::to_string(m.n1) + "x" + std::to_string(m.n2);
}

// Field-strength sum over the mesh for a projector of the lowest `nb`
// bands (determinant links) or a single band (nb == 1, column `band`).
// Plaquettes are traversed k2-edge first; this orientation makes the
// result match the Streda sign of the Hall integers.
double field_strength_sum(const MeshEigensystem& m, int band, int nb, bool joint) {
    auto block = [&](std::size_t i) -> Eigen::MatrixXcd {
        if (joint) return m.vectors[i].leftCols(nb);
        return m.vectors[i].col(band);
    };
    auto link = [&](std::size_t a, std::size_t b) -> std::complex<double> {
        Eigen::MatrixXcd overlap = block(a).adjoint() * block(b);
        if (overlap.rows() == 1) return overlap(0, 0);
        return overlap.determinant();
    };
    double total = 0.0;
    std::vector<double> partial(static_cast<std::size_t>(m.n1), 0.0);
    parallel_for(static_cast<std::size_t>(m.n1), [&](std::size_t i1) {
        double acc = 0.0;
        for (int i2 = 0; i2 < m.n2; ++i2) {
            std::size_t a = m.idx(static_cast<int>(i1), i2);
            std::size_t b = m.idx(static_cast<int>(i1), i2 + 1);
            std::size_t c = m.idx(static_cast<int>(i1) + 1, i2 + 1);
            std::size_t d = m.idx(static_cast<int>(i1) + 1, i2);
            std::complex<double> loop = link(a, b) * link(b, c) * link(c, d) * link(d, a);
            acc += std::arg(loop);
        }
        partial[i1] = acc;
    });
    for (double v : partial) total += v;  // fixed reduction order
    return total / kTwoPi;
}

long long round_to_integer(double c, const RationalFlux& flux) {
    double rounded = std::round(c);
    if (std::fabs(c - rounded) > kChernResidueError)
        throw MeshTooCoarseError("chern: plaquette sum " + std::to_string(c) + " at flux " +
                                 to_string(flux) + " is not close to an integer; refine the mesh");
    return static_cast<long long>(rounded);
}

}  // namespace

namespace {

double band_sum_checked(const MeshEigensystem& m, int band) {
    if (band < 1 || band > m.flux.q) throw std::domain_error("band_chern: band index out of range");
    std::size_t where = 0;
    double sep = min_separation(m, band - 1, &where);
    if (sep <= kDegeneracyTol)
        throw DegenerateBandError("band_chern: band " + std::to_string(band) + " of flux " +
                                  to_string(m.flux) + " degenerate at k-point " +
                                  kpoint_name(m, where) + " (separation " + std::to_string(sep) +
                                  ")");
    return field_strength_sum(m, band - 1, 1, false);
}

double gap_sum_checked(const MeshEigensystem& m, long long j) {
    if (j < 1 || j > m.flux.q - 1) throw std::domain_error("gap_chern: gap index out of range");
    // Only the separation across gap j matters for the joint projector.
    double best = std::numeric_limits<double>::infinity();
    std::size_t where = 0;
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        double d = m.values[i][j] - m.values[i][j - 1];
        if (d < best) { best = d; where = i; }
    }
    if (best <= kDegeneracyTol)
        throw DegenerateBandError("gap_chern: gap " + std::to_string(j) + " of flux " +
                                  to_string(m.flux) + " closes at k-point " + kpoint_name(m, where) +
                                  " (separation " + std::to_string(best) + ")");
    return field_strength_sum(m, 0, static_cast<int>(j), true);
}

}  // namespace

long long band_chern(const RationalFlux& flux, int band, int n1, int n2) {
    MeshEigensystem m = solve_mesh(flux, n1, n2);
    return round_to_integer(band_sum_checked(m, band), m.flux);
}

long long gap_chern(const RationalFlux& flux, long long j, int n1, int n2) {
    MeshEigensystem m = solve_mesh(flux, n1, n2);
    return round_to_integer(gap_sum_checked(m, j), m.flux);
}

double band_field_strength(const RationalFlux& flux, int band, int n1, int n2) {
    MeshEigensystem m = solve_mesh(flux, n1, n2);
    return band_sum_checked(m, band);
}

double gap_field_strength(const RationalFlux& flux, long long j, int n1, int n2) {
    MeshEigensystem m = solve_mesh(flux, n1, n2);
    return gap_sum_checked(m, j);
}

ChernResult chern_numbers(const RationalFlux& flux, int n1, int n2) {
    MeshEigensystem m = solve_mesh(flux, n1, n2);
    ChernResult result;
    result.flux = m.flux;
    result.n1 = n1;
    result.n2 = n2;
    result.min_plaquette_gap = std::numeric_limits<double>::infinity();
    for (int b = 0; b < m.flux.q; ++b) {
        std::size_t where = 0;
        double sep = min_separation(m, b, &where);
        if (sep < result.min_plaquette_gap) result.min_plaquette_gap = sep;
        if (sep <= kDegeneracyTol)
            throw DegenerateBandError("chern_numbers: band " + std::to_string(b + 1) + " of flux " +
                                      to_string(m.flux) + " degenerate at k-point " +
                                      kpoint_name(m, where));
        result.band_cherns.push_back(round_to_integer(field_strength_sum(m, b, 1, false), m.flux));
    }
    return result;
}

}  // namespace hof
