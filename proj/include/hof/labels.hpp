#pragma once

#include <optional>

#include "hof/rational.hpp"

namespace hof {

/// Integer pair attached to the j-th spectral gap at flux p/q.
/// The defining identity is j = n*q + k*p with |k| <= q/2:
///   k is the Hall integer of the tight-binding diagram,
///   n the Hall integer of the Landau diagram (and the density intercept,
///   rho = n + k*p/q inside the gap).
struct GapLabel {
    long long j = 0;
    long long k = 0;
    long long n = 0;
};

/// Representative of v mod modulus in (-modulus/2, modulus/2].
long long centered_mod(long long v, long long modulus);

/// Label of gap j (1 <= j <= q-1) at canonical flux p/q, p >= 1.
/// Returns nullopt for the zero-width central gap (q even, j = q/2).
/// Fluxes outside [0, 1) are folded by periodicity first.
/// Throws std::domain_error for j out of range or p = 0 after folding.
std::optional<GapLabel> label_gap(const RationalFlux& flux, long long j);

/// Label of gap j of the split-Landau-level diagram row at flux p/q
/// (vertical coordinate v = q/p >= 1). The split level has p subbands, so
/// 1 <= j <= p-1; the stored n is the Hall integer of the Landau diagram
/// and satisfies j = n*p + k*q with |k| <= p/2. Unlike the band geometry,
/// the label depends on the unfolded pair (p, q): rows v and v+1 repeat
/// the spectrum but not the coloring. Returns nullopt for the closed
/// central gap (p even, j = p/2).
std::optional<GapLabel> landau_gap_label(const RationalFlux& landau_flux, long long j);

}  // namespace hof
