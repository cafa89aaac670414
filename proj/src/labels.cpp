#include "hof/labels.hpp"

#include <stdexcept>

namespace hof {

long long centered_mod(long long v, long long modulus) {
    long long r = v % modulus;
    if (r < 0) r += modulus;
    if (2 * r > modulus) r -= modulus;
    return r;
}

std::optional<GapLabel> label_gap(const RationalFlux& flux, long long j) {
    RationalFlux f = fold_unit(flux);
    if (f.p == 0)
        throw std::domain_error("label_gap: flux 0 has no Diophantine labels");
    if (j < 1 || j > f.q - 1)
        throw std::domain_error("label_gap: gap index out of range");
    if (f.q % 2 == 0 && j == f.q / 2) return std::nullopt;  // closed central gap

    auto [m, euclid_n] = extended_euclid(f.p, f.q);
    (void)euclid_n;
    long long k = centered_mod(j * m, f.q);
    long long n = (j - k * f.p) / f.q;
    return GapLabel{j, k, n};
}

std::optional<GapLabel> landau_gap_label(const RationalFlux& landau_flux, long long j) {
    long long p = landau_flux.p, q = landau_flux.q;
    if (p < 1 || p > q)
        throw std::domain_error("landau_gap_label: flux must lie in (0, 1]");
    if (j < 1 || j > p - 1)
        throw std::domain_error("landau_gap_label: gap index out of range");
    if (p % 2 == 0 && j == p / 2) return std::nullopt;

    // Same algorithm with p and q interchanged: q*m' - p*n' = 1.
    // (q % p is nonzero here: p >= 2 once a gap index is in range.)
    auto [m, euclid_n] = extended_euclid(q % p, p);
    (void)euclid_n;
    long long k = centered_mod(j * m, p);
    long long n = (j - k * q) / p;
    return GapLabel{j, k, n};
}

}  // namespace hof
