#include "hof/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hof {

double pressure_from_mesh(const SpectrumMesh& mesh, double mu) {
    double sum = 0.0;
    for (const auto& levels : mesh.levels)
        for (Eigen::Index b = 0; b < levels.size(); ++b)
            if (mu > levels[b]) sum += mu - levels[b];
    return sum / (static_cast<double>(mesh.flux.q) * mesh.n1 * mesh.n2);
}

double pressure(double mu, const RationalFlux& flux, int n1, int n2) {
    return pressure_from_mesh(spectrum_mesh(flux, n1, n2), mu);
}

double density_from_mesh(const SpectrumMesh& mesh, double mu) {
    long long count = 0;
    for (const auto& levels : mesh.levels)
        for (Eigen::Index b = 0; b < levels.size(); ++b)
            if (levels[b] < mu) ++count;
    return static_cast<double>(count) / (static_cast<double>(mesh.flux.q) * mesh.n1 * mesh.n2);
}

double density(double mu, const RationalFlux& flux, int n1, int n2) {
    return density_from_mesh(spectrum_mesh(flux, n1, n2), mu);
}

RationalFlux gap_density(const RationalFlux& flux, long long j) {
    RationalFlux f = fold_unit(flux);
    if (j < 1 || j > f.q - 1) throw std::domain_error("gap_density: gap index out of range");
    return reduce(j, f.q);
}

MuLocation locate_mu(const BandStructure& bs, double mu) {
    if (mu < bs.bands.front().lo) return {MuRegion::Below, 0, std::nullopt};
    if (mu > bs.bands.back().hi) return {MuRegion::Above, 0, std::nullopt};
    for (std::size_t b = 0; b < bs.bands.size(); ++b) {
        if (mu >= bs.bands[b].lo && mu <= bs.bands[b].hi)
            return {MuRegion::Band, static_cast<long long>(b + 1), std::nullopt};
        if (b + 1 < bs.bands.size() && mu < bs.bands[b + 1].lo) {
            long long j = static_cast<long long>(b + 1);
            std::optional<GapLabel> label;
            if (!bs.gaps.empty()) label = bs.gaps[b].label;
            return {MuRegion::Gap, j, label};
        }
    }
    return {MuRegion::Band, static_cast<long long>(bs.bands.size()), std::nullopt};
}

namespace {

std::optional<GapLabel> tracked_gap(const RationalFlux& flux, double mu) {
    MuLocation loc = locate_mu(labeled_gaps(flux), mu);
    if (loc.region == MuRegion::Gap && loc.label) return loc.label;
    return std::nullopt;
}

}  // namespace

long long streda_sigma(double mu, const RationalFlux& flux, const RationalFlux& neighbor) {
    RationalFlux f1 = fold_unit(flux);
    RationalFlux f2 = fold_unit(neighbor);
    if (f1.p == 0 || f2.p == 0 || f1 == f2)
        throw GapNotTrackedError("streda_sigma: need two distinct nonzero fluxes");
    auto g1 = tracked_gap(f1, mu);
    auto g2 = tracked_gap(f2, mu);
    if (!g1 || !g2 || g1->k != g2->k || g1->n != g2->n)
        throw GapNotTrackedError("streda_sigma: gap not tracked at mu=" + std::to_string(mu) +
                                 " between " + to_string(f1) + " and " + to_string(f2));
    // rho = j/q exactly in a gap; the slope is a ratio of integers.
    long long num = g2->j * f1.q - g1->j * f2.q;
    long long den = f2.p * f1.q - f1.p * f2.q;
    if (num % den != 0)
        throw GapNotTrackedError("streda_sigma: non-integer slope between " + to_string(f1) +
                                 " and " + to_string(f2));
    return num / den;
}

namespace {

struct StencilPoint {
    double x = 0.0;  // signed flux coordinate before folding
    RationalFlux snapped;
    MuLocation loc;
};

StencilPoint stencil_point(double x, double mu, long long den_cap) {
    StencilPoint pt;
    pt.x = x;
    pt.snapped = approximate_ratio(std::fabs(x), den_cap);
    if (x < 0) pt.snapped.p = -pt.snapped.p;
    pt.loc = locate_mu(labeled_gaps(pt.snapped), mu);
    return pt;
}

bool same_region(const MuLocation& a, const MuLocation& b) {
    if (a.region != b.region) return false;
    if (a.region != MuRegion::Gap) return a.region != MuRegion::Band;
    if (!a.label || !b.label) return false;
    return a.label->k == b.label->k && a.label->n == b.label->n;
}

}  // namespace

double magnetization(double mu, const RationalFlux& flux, double delta_flux, long long den_cap,
                     int n1, int n2) {
    if (delta_flux <= 0) throw std::domain_error("magnetization: stencil width must be positive");
    double x = flux.value();
    StencilPoint lo = stencil_point(x - delta_flux, mu, den_cap);
    StencilPoint mid = stencil_point(x, mu, den_cap);
    StencilPoint hi = stencil_point(x + delta_flux, mu, den_cap);
    if (!same_region(lo.loc, mid.loc) || !same_region(mid.loc, hi.loc))
        throw GapNotTrackedError("magnetization: gap does not persist across the flux stencil");
    double p_lo = pressure(mu, lo.snapped, n1, n2);
    double p_hi = pressure(mu, hi.snapped, n1, n2);
    double db = kFluxToB * (hi.snapped.value() - lo.snapped.value());
    if (db == 0.0) throw GapNotTrackedError("magnetization: stencil collapsed after snapping");
    return (p_hi - p_lo) / db;
}

std::vector<ThermoSample> thermo_samples(const RationalFlux& flux, double mu_lo, double mu_hi,
                                         int steps, int n1, int n2, double delta_flux,
                                         long long den_cap) {
    if (steps < 1) throw std::domain_error("thermo_samples: need at least one step");
    RationalFlux f = fold_unit(flux);
    SpectrumMesh mesh = spectrum_mesh(f, n1, n2);
    BandStructure bs = labeled_gaps(f);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ThermoSample> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        double t = steps == 1 ? 0.5 : static_cast<double>(i) / (steps - 1);
        ThermoSample s;
        s.mu = mu_lo + t * (mu_hi - mu_lo);
        s.flux = f;
        s.pressure = pressure_from_mesh(mesh, s.mu);
        s.density = density_from_mesh(mesh, s.mu);
        s.magnetization = nan;
        s.sigma_hall = nan;
        MuLocation loc = locate_mu(bs, s.mu);
        if (loc.region == MuRegion::Gap && loc.label) {
            s.sigma_hall = static_cast<double>(loc.label->k);
            try {
                s.magnetization = magnetization(s.mu, f, delta_flux, den_cap, n1, n2);
            } catch (const GapNotTrackedError&) {
            }
        }
        out.push_back(s);
    }
    return out;
}

double SymmetryReport::worst() const {
    return std::max({max_flux_flip, max_flux_period, max_particle_hole});
}

SymmetryReport check_symmetries(const std::vector<double>& mu_grid,
                                const std::vector<RationalFlux>& fluxes, int n1, int n2) {
    SymmetryReport report;
    for (const auto& flux : fluxes) {
        SpectrumMesh base = spectrum_mesh(flux, n1, n2);
        SpectrumMesh flipped = spectrum_mesh({-flux.p, flux.q}, n1, n2);
        SpectrumMesh shifted = spectrum_mesh({flux.p + flux.q, flux.q}, n1, n2);
        for (double mu : mu_grid) {
            double p0 = pressure_from_mesh(base, mu);
            report.max_flux_flip =
                std::max(report.max_flux_flip, std::fabs(p0 - pressure_from_mesh(flipped, mu)));
            report.max_flux_period =
                std::max(report.max_flux_period, std::fabs(p0 - pressure_from_mesh(shifted, mu)));
            report.max_particle_hole = std::max(
                report.max_particle_hole, std::fabs(p0 - mu - pressure_from_mesh(base, -mu)));
        }
    }
    return report;
}

namespace {

// Landau label for gap j of the row at Landau flux p/q, paired with its
// exact density rho_l = j/q.
struct LandauGap {
    GapLabel label;
    long long j;
    double mu_lo, mu_hi;
};

std::vector<LandauGap> landau_gaps(const RationalFlux& landau_flux, double min_width) {
    // Spectral problem of the row: Harper at q/p (p subbands after folding).
    RationalFlux dual{landau_flux.q, landau_flux.p};
    BandStructure bs = band_edges(dual);
    std::vector<LandauGap> out;
    for (long long j = 1; j < landau_flux.p; ++j) {
        double lo = bs.bands[j - 1].hi;
        double hi = bs.bands[j].lo;
        if (hi - lo <= min_width) continue;
        auto label = landau_gap_label(landau_flux, j);
        if (!label) continue;
        out.push_back({*label, j, lo, hi});
    }
    return out;
}

}  // namespace

DualityReport check_duality(long long p, long long q, int n1, int n2) {
    if (p == 0) throw std::domain_error("check_duality: flux 0 has no dual model");
    RationalFlux landau = reduce(p, q);
    if (landau.p < 0 || landau.p > landau.q)
        throw std::domain_error("check_duality: Landau flux must lie in (0, 1]");
    DualityReport report;
    report.landau_flux = landau;

    // (b) conductance line of the duality map, in exact integer form:
    // in tb gap j of flux p/q, 2pi*sigma_l = rho_b - (p/q)*2pi*sigma_b
    // reduces to (j - k*p)/q = n.
    BandStructure bs = labeled_gaps(landau);
    for (const auto& gap : bs.gaps) {
        if (!gap.label) continue;
        long long num = gap.label->j - gap.label->k * landau.p;
        if (num % landau.q != 0 || num / landau.q != gap.label->n) {
            report.all_exact = false;
            continue;
        }
        ++report.conductance_identities;
    }
    // Band limits of the same line: a full tight-binding band (rho_b = 1,
    // sigma_b = 0) must give one quantum, an empty one zero. Computed from
    // the mesh density above/below the spectrum, not assumed.
    SpectrumMesh own_mesh = spectrum_mesh(landau, n1, n2);
    double rho_full = density_from_mesh(own_mesh, 3.0);
    double rho_empty = density_from_mesh(own_mesh, -3.0);
    if (std::llround(rho_full) != 1 || std::llround(rho_empty) != 0) report.all_exact = false;

    // (a) Streda on P_l across the Farey neighbors of the Landau flux:
    // tracked gaps must reproduce n of the swapped labeling, both from the
    // exact j/q densities and from mesh state counts. Neighbors are taken
    // from the refinement F_{2q}, where tracked partners actually appear.
    auto farey = farey_sequence(2 * landau.q);
    auto it = std::find(farey.begin(), farey.end(), landau);
    std::vector<RationalFlux> neighbors;
    if (it != farey.end()) {
        if (it != farey.begin() && std::prev(it)->p > 0) neighbors.push_back(*std::prev(it));
        if (std::next(it) != farey.end()) neighbors.push_back(*std::next(it));
    }
    auto own = landau_gaps(landau, kMinGapWidth);
    for (const auto& nb : neighbors) {
        if (nb.p == 0) continue;
        auto other = landau_gaps(nb, kMinGapWidth);
        for (const auto& g1 : own) {
            for (const auto& g2 : other) {
                if (g1.label.k != g2.label.k || g1.label.n != g2.label.n) continue;
                double lo = std::max(g1.mu_lo, g2.mu_lo);
                double hi = std::min(g1.mu_hi, g2.mu_hi);
                if (hi <= lo) continue;
                // Exact route: rho_l = j/q on both rows.
                long long num = g2.j * landau.q - g1.j * nb.q;
                long long den = nb.p * landau.q - landau.p * nb.q;
                if (num % den != 0 || num / den != g1.label.n) {
                    report.all_exact = false;
                    continue;
                }
                // Mesh route: rho_l = phi * rho_b(dual flux), state counting.
                double mu_mid = 0.5 * (lo + hi);
                double rho1 = landau.value() * density(mu_mid, {landau.q, landau.p}, n1, n2);
                double rho2 = nb.value() * density(mu_mid, {nb.q, nb.p}, n1, n2);
                double slope = (rho2 - rho1) / (nb.value() - landau.value());
                if (std::llround(slope) != g1.label.n || std::fabs(slope - std::llround(slope)) > 1e-6) {
                    report.all_exact = false;
                    continue;
                }
                ++report.streda_pairs;
            }
        }
    }
    return report;
}

std::vector<HInterval> classify_h_intervals(const std::vector<double>& h) {
    std::vector<HInterval> out;
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
        out.push_back(h[i + 1] > h[i] ? HInterval::Invertible : HInterval::CoexistenceCandidate);
    return out;
}

HScan h_field_scan(double mu, double b_lo, double b_hi, int steps, long long den_cap, int n1,
                   int n2) {
    if (steps < 2) throw std::domain_error("h_field_scan: need at least two grid points");
    if (!(b_hi > b_lo) || b_lo < 0) throw std::domain_error("h_field_scan: bad B window");
    HScan scan;
    scan.mu = mu;
    scan.b.resize(steps);
    scan.fluxes.resize(steps);
    std::vector<double> pressures(steps);
    for (int i = 0; i < steps; ++i) {
        scan.b[i] = b_lo + (b_hi - b_lo) * static_cast<double>(i) / (steps - 1);
        scan.fluxes[i] = approximate_ratio(scan.b[i] / kFluxToB, den_cap);
        pressures[i] = pressure(mu, scan.fluxes[i], n1, n2);
    }
    scan.m.resize(steps);
    for (int i = 0; i < steps; ++i) {
        int lo = std::max(0, i - 1);
        int hi = std::min(steps - 1, i + 1);
        double db = kFluxToB * (scan.fluxes[hi].value() - scan.fluxes[lo].value());
        scan.m[i] = db == 0.0 ? 0.0 : (pressures[hi] - pressures[lo]) / db;
    }
    scan.h.resize(steps);
    for (int i = 0; i < steps; ++i) scan.h[i] = scan.b[i] - 4.0 * std::numbers::pi * scan.m[i];
    scan.intervals = classify_h_intervals(scan.h);
    return scan;
}

}  // namespace hof
