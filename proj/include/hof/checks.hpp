#pragma once

#include <string>
#include <vector>

namespace hof {

/// Outcome of one named verification suite. `mutate` flips one compared
/// quantity before verification; a healthy suite must then fail (the
/// harness smoke test wired to `check ... --mutate`).
struct CheckResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;

    void fail(const std::string& line) {
        passed = false;
        lines.push_back("FAIL " + line);
    }
    void note(const std::string& line) { lines.push_back(line); }
};

/// Diophantine labeling identities for all coprime p/q with q <= qmax:
/// j = n*q + k*p, |k| <= q/2, electron-hole antisymmetry, the swapped
/// labeling congruence, and Bezout verification of extended_euclid
/// (including denominators up to 10^6).
CheckResult run_label_checks(long long qmax, bool mutate = false);

/// Berry-phase oracle against the labels: gap_chern == k for every open
/// gap with q <= qmax, band Cherns frozen for 1/3 and 2/5, zero total
/// Chern per flux, and mesh-doubling stability on one flux.
CheckResult run_chern_checks(long long qmax, int n1, int n2, bool mutate = false);

/// Streda slopes across Farey-neighbor fluxes with tracked gaps, exact
/// rational arithmetic, for denominators <= qmax.
CheckResult run_streda_checks(long long qmax, bool mutate = false);

/// Pressure symmetry residuals (flux flip, flux period, particle-hole)
/// below 1e-8 at matched meshes for denominators <= qmax.
CheckResult run_symmetry_checks(long long qmax, bool mutate = false);

/// Duality identities for all coprime pairs with q <= qmax.
CheckResult run_duality_checks(long long qmax, bool mutate = false);

}  // namespace hof
