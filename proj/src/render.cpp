#include "hof/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hof/labels.hpp"
#include "hof/parallel.hpp"

namespace hof {

Rgb color_for_label(long long v) {
    static constexpr Rgb warm[] = {
        {220, 30, 30},    // +1 red
        {245, 140, 20},   // +2 orange
        {250, 200, 40},   // +3
        {250, 240, 80},   // +4
        {215, 240, 85},   // +5 toward yellow-green
        {175, 230, 90},   // +6
        {135, 220, 95},   // +7
        {95, 210, 100},   // +8
    };
    static constexpr Rgb cold[] = {
        {40, 60, 220},    // -1 blue
        {30, 140, 240},   // -2
        {40, 210, 230},   // -3
        {140, 240, 230},  // -4
        {170, 245, 238},  // -5 pale cyans
        {195, 248, 242},  // -6
        {215, 250, 246},  // -7
        {232, 252, 250},  // -8
    };
    if (v == 0) return kBackgroundWhite;
    long long mag = std::min<long long>(v < 0 ? -v : v, 8);
    return v > 0 ? warm[mag - 1] : cold[mag - 1];
}

RasterConfig default_config(DiagramKind kind, int width, int height) {
    RasterConfig cfg;
    cfg.kind = kind;
    cfg.width = width;
    cfg.height = height;
    if (kind == DiagramKind::Landau) {
        cfg.axis_lo = 1.0;
        cfg.axis_hi = 4.0;
    }
    return cfg;
}

void validate(const RasterConfig& config) {
    if (config.width < 16 || config.height < 16)
        throw std::invalid_argument("raster: width and height must be at least 16");
    if (!(config.mu_hi > config.mu_lo)) throw std::invalid_argument("raster: empty mu window");
    if (!(config.axis_hi > config.axis_lo)) throw std::invalid_argument("raster: empty axis window");
    if (config.qmax != 0 && config.qmax < 2) throw std::invalid_argument("raster: qmax must be >= 2");
    if (config.min_width < 0) throw std::invalid_argument("raster: negative min_width");
    if (config.kind == DiagramKind::Landau && config.axis_lo < 1.0)
        throw std::invalid_argument("raster: landau axis starts at 1 (unit cells per flux quantum)");
}

long long effective_qmax(const RasterConfig& config) {
    if (config.qmax != 0) return config.qmax;
    return std::clamp<long long>(config.height / 8, 8, 120);
}

namespace {

// Everything a pixel row needs: band intervals plus colored-gap intervals.
struct RowPaint {
    std::vector<Band> bands;
    struct ColoredGap {
        double lo, hi;
        long long value;
    };
    std::vector<ColoredGap> gaps;
};

RowPaint make_row(DiagramKind kind, const RationalFlux& snapped, double min_width) {
    RowPaint row;
    if (kind == DiagramKind::Landau) {
        // snapped = a/b is the vertical coordinate v = 2pi/Phi; the
        // spectral problem is the Harper model at flux a/b, the coloring
        // integer is n of the unfolded swapped labeling at flux b/a.
        BandStructure bs = band_edges(snapped);
        row.bands = bs.bands;
        RationalFlux landau_flux{snapped.q, snapped.p};
        for (long long j = 1; j < landau_flux.p; ++j) {
            double lo = bs.bands[j - 1].hi;
            double hi = bs.bands[j].lo;
            if (hi - lo <= min_width) continue;
            if (auto label = landau_gap_label(landau_flux, j))
                row.gaps.push_back({lo, hi, label->n});
        }
        return row;
    }
    BandStructure bs = kind == DiagramKind::Tb ? labeled_gaps(snapped, min_width)
                                               : band_edges(snapped);
    row.bands = bs.bands;
    for (const auto& gap : bs.gaps)
        if (gap.label) row.gaps.push_back({gap.lo, gap.hi, gap.label->k});
    return row;
}

Rgb paint_pixel(DiagramKind kind, const RowPaint& row, double mu) {
    if (mu < row.bands.front().lo || mu > row.bands.back().hi) return kBackgroundWhite;
    for (const auto& band : row.bands)
        if (mu >= band.lo && mu <= band.hi) return kBandBlack;
    if (kind == DiagramKind::Mono) return kBackgroundWhite;
    for (const auto& gap : row.gaps)
        if (mu > gap.lo && mu < gap.hi) return color_for_label(gap.value);
    return kBandBlack;  // unresolved (sub-threshold) gap
}

}  // namespace

std::vector<std::uint8_t> render_butterfly(const RasterConfig& config) {
    validate(config);
    long long qmax = effective_qmax(config);

    // Snap every row, then build each distinct row payload once.
    std::vector<RationalFlux> row_key(config.height);
    for (int y = 0; y < config.height; ++y) {
        double t = (y + 0.5) / config.height;
        double v = config.axis_lo + t * (config.axis_hi - config.axis_lo);
        if (config.kind == DiagramKind::Landau) {
            row_key[y] = approximate_ratio(v, qmax);
        } else {
            double folded = v - std::floor(v);
            row_key[y] = best_approximant(folded, qmax);
        }
    }
    std::map<std::pair<long long, long long>, std::size_t> slot;
    std::vector<RationalFlux> unique;
    for (const auto& key : row_key)
        if (slot.emplace(std::make_pair(key.p, key.q), unique.size()).second) unique.push_back(key);
    std::vector<RowPaint> paints(unique.size());
    parallel_for(unique.size(), [&](std::size_t i) {
        paints[i] = make_row(config.kind, unique[i], config.min_width);
    });

    std::string header = "P6\n" + std::to_string(config.width) + " " +
                         std::to_string(config.height) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.size() +
                                    static_cast<std::size_t>(config.width) * config.height * 3);
    std::copy(header.begin(), header.end(), bytes.begin());

    double mu_center = 0.5 * (config.mu_lo + config.mu_hi);
    double mu_step = (config.mu_hi - config.mu_lo) / config.width;
    double half_width = 0.5 * config.width;
    parallel_for(static_cast<std::size_t>(config.height), [&](std::size_t y) {
        const RowPaint& row = paints[slot.at({row_key[y].p, row_key[y].q})];
        std::size_t offset = header.size() + y * static_cast<std::size_t>(config.width) * 3;
        for (int x = 0; x < config.width; ++x) {
            // Centered so that mirror columns carry exactly opposite mu.
            double mu = mu_center + (x + 0.5 - half_width) * mu_step;
            Rgb c = paint_pixel(config.kind, row, mu);
            bytes[offset + 3 * x + 0] = c.r;
            bytes[offset + 3 * x + 1] = c.g;
            bytes[offset + 3 * x + 2] = c.b;
        }
    });
    return bytes;
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::string format_float(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::vector<GapRow> gap_rows(const std::vector<RationalFlux>& fluxes, double min_width) {
    std::vector<GapRow> rows;
    for (const auto& flux : fluxes) {
        BandStructure bs = labeled_gaps(flux, min_width);
        for (const auto& gap : bs.gaps) {
            if (!gap.label) continue;
            rows.push_back({bs.flux.p, bs.flux.q, gap.j, gap.lo, gap.hi, gap.label->k,
                            gap.label->n});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const GapRow& a, const GapRow& b) {
        return std::tie(a.q, a.p, a.j) < std::tie(b.q, b.p, b.j);
    });
    return rows;
}

void emit_gaps(const std::vector<RationalFlux>& fluxes, TableFormat format, std::ostream& out,
               double min_width) {
    std::vector<GapRow> rows = gap_rows(fluxes, min_width);
    if (format == TableFormat::Csv) {
        out << "p,q,j,mu_lo,mu_hi,k,n\n";
        for (const auto& r : rows)
            out << r.p << ',' << r.q << ',' << r.j << ',' << format_float(r.mu_lo) << ','
                << format_float(r.mu_hi) << ',' << r.k << ',' << r.n << '\n';
        if (!out) throw std::runtime_error("emit_gaps: stream write failed");
        return;
    }
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows)
        doc.push_back({{"p", r.p},
                       {"q", r.q},
                       {"j", r.j},
                       {"mu_lo", r.mu_lo},
                       {"mu_hi", r.mu_hi},
                       {"k", r.k},
                       {"n", r.n}});
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("emit_gaps: stream write failed");
}

}  // namespace hof
