#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hof/spectrum.hpp"

namespace hof {

enum class DiagramKind { Tb, Mono, Landau };

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kBandBlack{0, 0, 0};
inline constexpr Rgb kBackgroundWhite{255, 255, 255};

/// Warm colors for positive Hall integers, cold for negative, white for 0;
/// large magnitudes drift toward yellow-green / pale cyan and |v| > 8
/// clamps to the +-8 entry.
Rgb color_for_label(long long v);

/// Geometry and axis windows of one diagram.
///   tb, mono:  vertical axis is the flux, window [0, 1] by default.
///   landau:    vertical axis is v = 2pi/Phi >= 1 (unit cells per flux
///              quantum), window [1, 4] by default.
/// The axis value increases downward in the emitted image. qmax = 0 picks
/// clamp(height/8, 8, 120). Rows snap to the best rational with
/// denominator <= qmax; columns are mu in [mu_lo, mu_hi].
struct RasterConfig {
    DiagramKind kind = DiagramKind::Tb;
    int width = 512;
    int height = 512;
    double mu_lo = -2.2;
    double mu_hi = 2.2;
    double axis_lo = 0.0;
    double axis_hi = 1.0;
    long long qmax = 0;
    double min_width = kMinGapWidth;
};

RasterConfig default_config(DiagramKind kind, int width = 512, int height = 512);

/// Throws std::invalid_argument on degenerate geometry (width or height
/// < 16, empty windows, qmax < 2 when explicit, landau window below 1).
void validate(const RasterConfig& config);

long long effective_qmax(const RasterConfig& config);

/// Renders the diagram as a complete binary pixmap (P6, maxval 255),
/// row-major top to bottom. Open gaps are colored by their Hall integer
/// (k for tb, the swapped-Diophantine n for landau), bands are black,
/// anything outside the spectrum hull is white; gaps narrower than
/// min_width count as unresolved spectrum and stay black. Byte-identical
/// across runs and worker counts.
std::vector<std::uint8_t> render_butterfly(const RasterConfig& config);

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);

/// One open gap, serialization-ready.
struct GapRow {
    long long p = 0, q = 0, j = 0;
    double mu_lo = 0.0, mu_hi = 0.0;
    long long k = 0, n = 0;
};

enum class TableFormat { Csv, Json };

/// Open labeled gaps of the given fluxes, sorted by (q, p, j).
std::vector<GapRow> gap_rows(const std::vector<RationalFlux>& fluxes,
                             double min_width = kMinGapWidth);

/// CSV (header p,q,j,mu_lo,mu_hi,k,n; floats at 12 significant digits)
/// or a JSON array of objects with the same field names.
void emit_gaps(const std::vector<RationalFlux>& fluxes, TableFormat format, std::ostream& out,
               double min_width = kMinGapWidth);

/// Locale-independent float formatting, 12 significant digits.
std::string format_float(double v);

}  // namespace hof
