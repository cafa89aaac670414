#include "hof/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "hof/parallel.hpp"

namespace hof {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Eigen::MatrixXcd bloch_hamiltonian(const RationalFlux& flux, double k1, double k2) {
    RationalFlux f = fold_unit(flux);
    long long q = f.q;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(q, q);
    if (q == 1) {
        h(0, 0) = std::cos(k1) + std::cos(k2);
        return h;
    }
    for (long long r = 0; r < q; ++r) {
        long long s = (r * f.p) % q;
        h(r, r) = std::cos(k2 + kTwoPi * static_cast<double>(s) / static_cast<double>(q));
    }
    for (long long r = 0; r + 1 < q; ++r) {
        h(r, r + 1) = 0.5;
        h(r + 1, r) = 0.5;
    }
    double qk1 = static_cast<double>(q) * k1;
    h(0, q - 1) += 0.5 * std::complex<double>(std::cos(qk1), -std::sin(qk1));
    h(q - 1, 0) += 0.5 * std::complex<double>(std::cos(qk1), std::sin(qk1));
    return h;
}

namespace {

Eigen::VectorXd eigenvalues_at(const RationalFlux& flux, double k1, double k2) {
    Eigen::MatrixXcd h = bloch_hamiltonian(flux, k1, k2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed at k=(" + std::to_string(k1) + ", " +
                                 std::to_string(k2) + ") for flux " + to_string(flux));
    return solver.eigenvalues();
}

}  // namespace

BandStructure band_edges(const RationalFlux& flux) {
    RationalFlux folded = fold_unit(flux);
    long long q = folded.q;
    // The spectrum depends on p only through min(p, q-p); building from the
    // reduced representative makes the reflection identity exact.
    RationalFlux rep = folded;
    if (q - folded.p < folded.p) rep = {q - folded.p, q};

    Eigen::VectorXd corner0 = eigenvalues_at(rep, 0.0, 0.0);
    double kc = std::numbers::pi / static_cast<double>(q);
    Eigen::VectorXd corner1 = eigenvalues_at(rep, kc, kc);

    std::vector<double> edges;
    edges.reserve(2 * q);
    for (long long i = 0; i < q; ++i) edges.push_back(corner0[i]);
    for (long long i = 0; i < q; ++i) edges.push_back(corner1[i]);
    std::sort(edges.begin(), edges.end());

    // Enforce the exact E -> -E symmetry of the edge set.
    std::vector<double> sym(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        sym[i] = 0.5 * (edges[i] - edges[edges.size() - 1 - i]);

    BandStructure bs;
    bs.flux = folded;
    bs.bands.reserve(q);
    for (long long b = 0; b < q; ++b) bs.bands.push_back({sym[2 * b], sym[2 * b + 1]});
    return bs;
}

BandStructure labeled_gaps(const RationalFlux& flux, double min_width) {
    BandStructure bs = band_edges(flux);
    long long q = bs.flux.q;
    bs.gaps.reserve(q >= 1 ? q - 1 : 0);
    for (long long j = 1; j < q; ++j) {
        Gap g;
        g.j = j;
        g.lo = bs.bands[j - 1].hi;
        g.hi = bs.bands[j].lo;
        if (g.width() > min_width) g.label = label_gap(bs.flux, j);
        bs.gaps.push_back(g);
    }
    return bs;
}

SpectrumMesh spectrum_mesh(const RationalFlux& flux, int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("spectrum_mesh: mesh sizes must be >= 1");
    RationalFlux folded = fold_unit(flux);
    SpectrumMesh mesh;
    mesh.flux = folded;
    mesh.n1 = n1;
    mesh.n2 = n2;
    mesh.levels.resize(static_cast<std::size_t>(n1) * n2);
    double q = static_cast<double>(folded.q);
    parallel_for(mesh.levels.size(), [&](std::size_t idx) {
        int i1 = static_cast<int>(idx) / n2;
        int i2 = static_cast<int>(idx) % n2;
        double k1 = kTwoPi / q * (static_cast<double>(i1) / n1);
        double k2 = kTwoPi * (static_cast<double>(i2) / n2);
        mesh.levels[idx] = eigenvalues_at(folded, k1, k2);
    });
    return mesh;
}

}  // namespace hof
