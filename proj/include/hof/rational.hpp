#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hof {

/// Reduced fraction p/q with q >= 1. Used both for magnetic flux per unit
/// cell (p flux quanta through q cells) and for generic exact ratios such
/// as gap densities. Zero is canonically 0/1, the sign lives in p.
struct RationalFlux {
    long long p = 0;
    long long q = 1;

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }

    bool operator==(const RationalFlux&) const = default;
};

/// Canonical reduced fraction with positive denominator. Throws
/// std::domain_error when q == 0.
RationalFlux reduce(long long p, long long q);

/// Folds a flux into [0, 1) by the periodicity phi -> phi + 1.
RationalFlux fold_unit(const RationalFlux& flux);

/// Solves p*m - q*n = 1 for coprime positive p, q, with m normalized to
/// 0 <= m < q. Throws std::domain_error when gcd(p, q) != 1.
std::pair<long long, long long> extended_euclid(long long p, long long q);

/// All reduced fractions in [0, 1] with denominator <= qmax, ascending.
std::vector<RationalFlux> farey_sequence(long long qmax);

/// Closest fraction to x in [0, 1] with denominator <= qmax. Ties break
/// toward smaller q, then smaller p.
RationalFlux best_approximant(double x, long long qmax);

/// best_approximant extended to x >= 0 by splitting off the integer part.
RationalFlux approximate_ratio(double x, long long den_cap);

std::string to_string(const RationalFlux& flux);

}  // namespace hof
