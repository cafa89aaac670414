#include "hof/checks.hpp"

#include <cmath>
#include <numeric>

#include "hof/chern.hpp"
#include "hof/labels.hpp"
#include "hof/rational.hpp"
#include "hof/render.hpp"
#include "hof/spectrum.hpp"
#include "hof/thermo.hpp"

namespace hof {

namespace {

std::vector<RationalFlux> coprime_fluxes(long long qmax) {
    std::vector<RationalFlux> out;
    for (long long q = 2; q <= qmax; ++q)
        for (long long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.push_back({p, q});
    return out;
}

}  // namespace

CheckResult run_label_checks(long long qmax, bool mutate) {
    CheckResult result{"labels"};
    long long gaps = 0;
    for (const auto& flux : coprime_fluxes(qmax)) {
        auto [m, n] = extended_euclid(flux.p, flux.q);
        if (flux.p * m - flux.q * n != 1)
            result.fail("euclid " + to_string(flux) + ": Bezout identity broken");
        for (long long j = 1; j < flux.q; ++j) {
            auto label = label_gap(flux, j);
            if (!label) {
                if (!(flux.q % 2 == 0 && j == flux.q / 2))
                    result.fail(to_string(flux) + " j=" + std::to_string(j) +
                                ": unexpected closed-gap signal");
                continue;
            }
            long long k = label->k;
            if (mutate && gaps == 0) k += 1;  // deliberate perturbation
            ++gaps;
            if (label->n * flux.q + k * flux.p != j)
                result.fail(to_string(flux) + " j=" + std::to_string(j) +
                            ": j != n*q + k*p with k=" + std::to_string(k));
            if (2 * std::llabs(k) > flux.q)
                result.fail(to_string(flux) + " j=" + std::to_string(j) + ": |k| > q/2");
            auto mirror = label_gap(flux, flux.q - j);
            if (!mirror || mirror->k != -label->k)
                result.fail(to_string(flux) + " j=" + std::to_string(j) +
                            ": electron-hole antisymmetry k_{q-j} = -k_j broken");
            if (flux.p >= 2) {
                // Swapped Diophantine: q*m' - p*n' = 1, label j*m' mod p.
                auto [mp, np] = extended_euclid(flux.q % flux.p, flux.p);
                (void)np;
                long long swapped = centered_mod(j * mp, flux.p);
                if ((swapped - label->n) % flux.p != 0)
                    result.fail(to_string(flux) + " j=" + std::to_string(j) +
                                ": swapped labeling disagrees with n mod p");
                if (2 * std::llabs(label->n) <= flux.p && swapped != label->n)
                    result.fail(to_string(flux) + " j=" + std::to_string(j) +
                                ": swapped labeling misses centered n");
            }
        }
    }
    // Wide-integer Bezout spot checks.
    for (auto [p, q] : {std::pair<long long, long long>{3, 1000003},
                        {999983, 1000000},
                        {123457, 999999}}) {
        if (std::gcd(p, q) != 1) continue;
        auto [m, n] = extended_euclid(p, q);
        if (p * m - q * n != 1)
            result.fail("euclid " + std::to_string(p) + "/" + std::to_string(q) + ": overflow");
    }
    result.note("labels: " + std::to_string(gaps) + " gaps verified up to q=" +
                std::to_string(qmax));
    return result;
}

CheckResult run_chern_checks(long long qmax, int n1, int n2, bool mutate) {
    CheckResult result{"chern"};
    long long compared = 0;
    for (const auto& flux : coprime_fluxes(qmax)) {
        BandStructure bs = labeled_gaps(flux);
        for (const auto& gap : bs.gaps) {
            if (!gap.label) continue;
            long long c = gap_chern(flux, gap.j, n1, n2);
            if (mutate && compared == 0) c += 1;
            ++compared;
            if (c != gap.label->k)
                result.fail(to_string(flux) + " j=" + std::to_string(gap.j) + ": gap Chern " +
                            std::to_string(c) + " != label " + std::to_string(gap.label->k));
        }
        if (flux.q % 2 == 1) {
            ChernResult cherns = chern_numbers(flux, n1, n2);
            long long total = std::accumulate(cherns.band_cherns.begin(),
                                              cherns.band_cherns.end(), 0LL);
            if (total != 0)
                result.fail(to_string(flux) + ": band Cherns sum to " + std::to_string(total));
        }
    }
    if (qmax >= 5) {
        auto c13 = chern_numbers({1, 3}, n1, n2).band_cherns;
        if (c13 != std::vector<long long>{1, -2, 1}) result.fail("1/3 band Cherns != (1,-2,1)");
        auto c25 = chern_numbers({2, 5}, n1, n2).band_cherns;
        if (c25 != std::vector<long long>{-2, 3, -2, 3, -2})
            result.fail("2/5 band Cherns != (-2,3,-2,3,-2)");
        // Mesh-doubling stability on one flux.
        if (chern_numbers({2, 5}, 2 * n1, 2 * n2).band_cherns != c25)
            result.fail("2/5 band Cherns change under mesh doubling");
    }
    result.note("chern: " + std::to_string(compared) + " open gaps matched on a " +
                std::to_string(n1) + "x" + std::to_string(n2) + " mesh");
    return result;
}

CheckResult run_streda_checks(long long qmax, bool mutate) {
    CheckResult result{"streda"};
    auto fluxes = coprime_fluxes(qmax);
    std::vector<BandStructure> structures;
    structures.reserve(fluxes.size());
    for (const auto& f : fluxes) structures.push_back(labeled_gaps(f));
    long long tracked = 0;
    for (std::size_t i = 0; i < fluxes.size(); ++i) {
        for (std::size_t l = i + 1; l < fluxes.size(); ++l) {
            for (const auto& g1 : structures[i].gaps) {
                if (!g1.label) continue;
                for (const auto& g2 : structures[l].gaps) {
                    if (!g2.label || g1.label->k != g2.label->k || g1.label->n != g2.label->n)
                        continue;
                    double lo = std::max(g1.lo, g2.lo), hi = std::min(g1.hi, g2.hi);
                    if (hi <= lo) continue;
                    long long sigma = streda_sigma(0.5 * (lo + hi), fluxes[i], fluxes[l]);
                    if (mutate && tracked == 0) sigma += 1;
                    ++tracked;
                    if (sigma != g1.label->k)
                        result.fail("streda " + to_string(fluxes[i]) + "<->" +
                                    to_string(fluxes[l]) + " j=" + std::to_string(g1.j) +
                                    ": slope " + std::to_string(sigma) +
                                    " != k=" + std::to_string(g1.label->k));
                }
            }
        }
    }
    if (tracked == 0) result.fail("streda: no tracked gap pairs found");
    result.note("streda: " + std::to_string(tracked) + " tracked gap pairs up to q=" +
                std::to_string(qmax));
    return result;
}

CheckResult run_symmetry_checks(long long qmax, bool mutate) {
    CheckResult result{"symmetry"};
    constexpr double kTol = 1e-8;
    std::vector<double> mu_grid;
    for (int i = 0; i <= 100; ++i) mu_grid.push_back(-2.5 + 5.0 * i / 100);
    std::vector<RationalFlux> fluxes = {{1, 3}, {2, 5}};
    for (const auto& f : coprime_fluxes(std::min<long long>(qmax, 8)))
        if (!(f == RationalFlux{1, 3}) && !(f == RationalFlux{2, 5})) fluxes.push_back(f);
    SymmetryReport report = check_symmetries(mu_grid, fluxes, 32, 32);
    if (mutate) report.max_flux_flip += 1e-6;
    if (report.max_flux_flip > kTol)
        result.fail("P(mu,phi) != P(mu,-phi): residual " + format_float(report.max_flux_flip));
    if (report.max_flux_period > kTol)
        result.fail("P(mu,phi) != P(mu,phi+1): residual " + format_float(report.max_flux_period));
    if (report.max_particle_hole > kTol)
        result.fail("P(mu,phi) != mu + P(-mu,phi): residual " +
                    format_float(report.max_particle_hole));
    result.note("symmetry: worst residual " + format_float(report.worst()) + " over " +
                std::to_string(fluxes.size()) + " fluxes, 101-point mu grid");
    return result;
}

CheckResult run_duality_checks(long long qmax, bool mutate) {
    CheckResult result{"duality"};
    long long identities = 0, pairs = 0;
    bool first = true;
    for (const auto& flux : coprime_fluxes(qmax)) {
        DualityReport report = check_duality(flux.p, flux.q, 24, 24);
        bool ok = report.all_exact;
        if (mutate && first) ok = !ok;
        first = false;
        if (!ok) result.fail("duality at Landau flux " + to_string(flux) + " not exact");
        identities += report.conductance_identities;
        pairs += report.streda_pairs;
    }
    result.note("duality: " + std::to_string(identities) + " conductance identities, " +
                std::to_string(pairs) + " Landau Streda pairs up to q=" + std::to_string(qmax));
    return result;
}

}  // namespace hof
