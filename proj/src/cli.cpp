#include "hof/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hof/checks.hpp"
#include "hof/render.hpp"
#include "hof/thermo.hpp"

namespace hof {

namespace {

RationalFlux parse_flux(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw std::invalid_argument("flux must be given as P/Q, got '" + text + "'");
    std::size_t used1 = 0, used2 = 0;
    long long p = std::stoll(text.substr(0, slash), &used1);
    long long q = std::stoll(text.substr(slash + 1), &used2);
    if (used1 != slash || used2 != text.size() - slash - 1)
        throw std::invalid_argument("flux must be given as P/Q, got '" + text + "'");
    return reduce(p, q);
}

std::pair<int, int> parse_mesh(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("mesh must be given as N1xN2, got '" + text + "'");
    int n1 = std::stoi(text.substr(0, x));
    int n2 = std::stoi(text.substr(x + 1));
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("mesh sizes must be positive");
    return {n1, n2};
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    return file;
}

void print_spectrum_text(const BandStructure& bs, std::ostream& out) {
    out << "flux " << to_string(bs.flux) << ": " << bs.bands.size() << " bands\n";
    for (std::size_t b = 0; b < bs.bands.size(); ++b)
        out << "band " << b + 1 << ": [" << format_float(bs.bands[b].lo) << ", "
            << format_float(bs.bands[b].hi) << "]\n";
    for (const auto& gap : bs.gaps) {
        out << "gap " << gap.j << ": (" << format_float(gap.lo) << ", " << format_float(gap.hi)
            << ")";
        if (gap.label)
            out << " k=" << gap.label->k << " n=" << gap.label->n;
        else
            out << " closed";
        out << "\n";
    }
}

nlohmann::json spectrum_json(const BandStructure& bs) {
    nlohmann::json doc;
    doc["p"] = bs.flux.p;
    doc["q"] = bs.flux.q;
    doc["bands"] = nlohmann::json::array();
    for (const auto& band : bs.bands) doc["bands"].push_back({band.lo, band.hi});
    doc["gaps"] = nlohmann::json::array();
    for (const auto& gap : bs.gaps) {
        nlohmann::json g{{"j", gap.j}, {"mu_lo", gap.lo}, {"mu_hi", gap.hi}};
        if (gap.label) {
            g["k"] = gap.label->k;
            g["n"] = gap.label->n;
        }
        doc["gaps"].push_back(g);
    }
    return doc;
}

int run_check(const CheckResult& result) {
    for (const auto& line : result.lines) std::cout << line << "\n";
    std::cout << (result.passed ? "PASS " : "FAIL ") << result.name << "\n";
    return result.passed ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Hofstadter spectra, gap labels, T=0 thermodynamics and butterfly diagrams"};
    app.footer(
        "Worker count comes from HOF_THREADS (default: hardware concurrency);\n"
        "all output is byte-identical across worker counts. Images are binary\n"
        "pixmaps (P6, maxval 255), rows top to bottom with the vertical axis\n"
        "value increasing downward.");
    app.require_subcommand(1);

    std::string flux_text, mesh_text, out_path, kind_text, format_json;
    double min_width = kMinGapWidth;
    bool as_json = false;

    // spectrum
    auto* sc_spectrum = app.add_subcommand("spectrum", "Bands and labeled gaps at rational flux");
    sc_spectrum->add_option("--flux", flux_text, "flux P/Q")->required();
    sc_spectrum->add_option("--mesh", mesh_text, "validate edges against an N1xN2 mesh");
    sc_spectrum->add_flag("--json", as_json, "emit JSON instead of text");
    sc_spectrum->callback([&] {
        RationalFlux flux = parse_flux(flux_text);
        BandStructure bs = labeled_gaps(flux, min_width);
        if (!mesh_text.empty()) {
            auto [n1, n2] = parse_mesh(mesh_text);
            SpectrumMesh mesh = spectrum_mesh(flux, n1, n2);
            double worst = 0.0;
            for (const auto& levels : mesh.levels)
                for (Eigen::Index b = 0; b < levels.size(); ++b) {
                    double viol = std::max(bs.bands[b].lo - levels[b], levels[b] - bs.bands[b].hi);
                    worst = std::max(worst, viol);
                }
            if (worst > 1e-9)
                throw std::runtime_error("mesh eigenvalue escapes its band by " +
                                         format_float(worst));
            std::cout << "mesh " << mesh_text << ": all eigenvalues inside their bands (worst "
                      << format_float(worst) << ")\n";
        }
        if (as_json)
            std::cout << spectrum_json(bs).dump(2) << "\n";
        else
            print_spectrum_text(bs, std::cout);
    });

    // gaps
    auto* sc_gaps = app.add_subcommand("gaps", "Open-gap table (CSV or JSON) for one flux");
    sc_gaps->add_option("--flux", flux_text, "flux P/Q")->required();
    sc_gaps->add_option("--min-width", min_width, "gap width threshold");
    sc_gaps->add_flag("--json", as_json, "emit JSON instead of CSV");
    sc_gaps->add_option("--out", out_path, "output path (default stdout)");
    sc_gaps->callback([&] {
        std::ofstream file;
        std::ostream& out = open_or_stdout(out_path, file);
        emit_gaps({parse_flux(flux_text)}, as_json ? TableFormat::Json : TableFormat::Csv, out,
                  min_width);
    });

    // butterfly
    RasterConfig cfg;
    auto* sc_fly = app.add_subcommand("butterfly", "Render a phase diagram as a P6 pixmap");
    sc_fly->add_option("--kind", kind_text, "tb | mono | landau")->required();
    sc_fly->add_option("--width", cfg.width, "pixels");
    sc_fly->add_option("--height", cfg.height, "pixels");
    sc_fly->add_option("--qmax", cfg.qmax, "denominator cap for row snapping");
    sc_fly->add_option("--mu-from", cfg.mu_lo, "left edge of the mu window");
    sc_fly->add_option("--mu-to", cfg.mu_hi, "right edge of the mu window");
    auto* axis_from = sc_fly->add_option("--axis-from", cfg.axis_lo, "top of the vertical window");
    auto* axis_to = sc_fly->add_option("--axis-to", cfg.axis_hi, "bottom of the vertical window");
    sc_fly->add_option("--min-width", cfg.min_width, "gap width threshold");
    sc_fly->add_option("--out", out_path, "output pixmap path")->required();
    sc_fly->callback([&] {
        if (kind_text == "tb")
            cfg.kind = DiagramKind::Tb;
        else if (kind_text == "mono")
            cfg.kind = DiagramKind::Mono;
        else if (kind_text == "landau")
            cfg.kind = DiagramKind::Landau;
        else
            throw std::invalid_argument("unknown kind '" + kind_text + "'");
        if (cfg.kind == DiagramKind::Landau) {
            if (axis_from->count() == 0) cfg.axis_lo = 1.0;
            if (axis_to->count() == 0) cfg.axis_hi = 4.0;
        }
        write_bytes(out_path, render_butterfly(cfg));
        std::cout << "wrote " << out_path << "\n";
    });

    // thermo
    double mu_from = -2.2, mu_to = 2.2;
    int steps = 101;
    auto* sc_thermo = app.add_subcommand("thermo", "Pressure/density/magnetization table (CSV)");
    sc_thermo->add_option("--flux", flux_text, "flux P/Q")->required();
    sc_thermo->add_option("--mu-from", mu_from, "first mu");
    sc_thermo->add_option("--mu-to", mu_to, "last mu");
    sc_thermo->add_option("--steps", steps, "number of mu samples")->check(CLI::PositiveNumber);
    sc_thermo->add_option("--mesh", mesh_text, "quadrature mesh N1xN2 (default 64x64)");
    sc_thermo->add_option("--out", out_path, "output path (default stdout)");
    sc_thermo->callback([&] {
        int n1 = 64, n2 = 64;
        if (!mesh_text.empty()) std::tie(n1, n2) = parse_mesh(mesh_text);
        auto samples = thermo_samples(parse_flux(flux_text), mu_from, mu_to, steps, n1, n2);
        std::ofstream file;
        std::ostream& out = open_or_stdout(out_path, file);
        out << "mu,p,q,pressure,density,magnetization,sigma_hall\n";
        for (const auto& s : samples)
            out << format_float(s.mu) << ',' << s.flux.p << ',' << s.flux.q << ','
                << format_float(s.pressure) << ',' << format_float(s.density) << ','
                << format_float(s.magnetization) << ',' << format_float(s.sigma_hall) << '\n';
        if (!out) throw std::runtime_error("thermo: stream write failed");
    });

    // scan-h
    double scan_mu = 0.0, b_from = 0.0, b_to = 1.0;
    long long scan_qmax = 32;
    auto* sc_scan = app.add_subcommand("scan-h", "Exploratory H = B - 4*pi*M scan at fixed mu");
    sc_scan->add_option("--mu", scan_mu, "chemical potential")->required();
    sc_scan->add_option("--b-from", b_from, "first B (B = 2*pi*flux)")->required();
    sc_scan->add_option("--b-to", b_to, "last B")->required();
    sc_scan->add_option("--steps", steps, "grid points")->check(CLI::PositiveNumber);
    sc_scan->add_option("--qmax", scan_qmax, "denominator cap for flux snapping");
    sc_scan->add_option("--mesh", mesh_text, "quadrature mesh N1xN2 (default 32x32)");
    sc_scan->add_option("--out", out_path, "output path (default stdout)");
    sc_scan->callback([&] {
        int n1 = 32, n2 = 32;
        if (!mesh_text.empty()) std::tie(n1, n2) = parse_mesh(mesh_text);
        HScan scan = h_field_scan(scan_mu, b_from, b_to, steps, scan_qmax, n1, n2);
        std::ofstream file;
        std::ostream& out = open_or_stdout(out_path, file);
        out << "b,p,q,m,h,interval\n";
        for (std::size_t i = 0; i < scan.b.size(); ++i) {
            out << format_float(scan.b[i]) << ',' << scan.fluxes[i].p << ',' << scan.fluxes[i].q
                << ',' << format_float(scan.m[i]) << ',' << format_float(scan.h[i]) << ',';
            if (i == 0)
                out << "-";
            else
                out << (scan.intervals[i - 1] == HInterval::Invertible ? "invertible"
                                                                       : "coexistence-candidate");
            out << '\n';
        }
        if (!out) throw std::runtime_error("scan-h: stream write failed");
    });

    // check
    auto* sc_check = app.add_subcommand("check", "Run a verification suite (exit 1 on failure)");
    sc_check->require_subcommand(1);
    long long qmax = 0;
    bool mutate = false;
    int exit_code = 0;
    auto add_suite = [&](const std::string& name, long long default_qmax, auto runner) {
        auto* sub = sc_check->add_subcommand(name);
        auto* opt = sub->add_option("--qmax", qmax, "denominator cap");
        sub->add_flag("--mutate", mutate, "perturb one compared value (harness smoke test)");
        sub->callback([&, default_qmax, runner, opt] {
            long long q = opt->count() ? qmax : default_qmax;
            exit_code = run_check(runner(q, mutate));
        });
    };
    add_suite("labels", 20, [](long long q, bool m) { return run_label_checks(q, m); });
    add_suite("chern", 8, [](long long q, bool m) { return run_chern_checks(q, 60, 60, m); });
    add_suite("streda", 12, [](long long q, bool m) { return run_streda_checks(q, m); });
    add_suite("symmetry", 5, [](long long q, bool m) { return run_symmetry_checks(q, m); });
    add_suite("duality", 12, [](long long q, bool m) { return run_duality_checks(q, m); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        usage << app.help();
        std::cerr << e.what() << "\n" << usage.str();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace hof
