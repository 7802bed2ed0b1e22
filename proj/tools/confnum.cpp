// confnum: reports and demos for the conformal number tower.
//
// Commands: tower, verify, table, demo. Exit codes: 0 pass,
// 1 verification/demo failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conformal/demos.hpp"
#include "conformal/errors.hpp"
#include "conformal/lie.hpp"
#include "conformal/tensors.hpp"
#include "conformal/tower.hpp"

namespace {

using namespace conformal;
using nlohmann::json;

struct RunConfig {
    int level = 2;
    int max_level = 4;
    std::string format = "text";
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    int word_cap = 4;
    bool no_timing = false;
    bool unrolled = false;
    std::string suite = "all";
    std::string demo;
};

std::string clifford_label(const AlgebraLevel& lv) {
    return "R_{" + std::to_string(lv.level) + "," + std::to_string(lv.level + 1) + "}";
}

std::string level_note(int level) {
    switch (level) {
        case 0: return "complex plane";
        case 1: return "Minkowski space; isomorphic to the Pauli algebra";
        case 2: return "ambient space of AdS5; equivalent to the Dirac algebra";
        default: return "";
    }
}

int cmd_tower(const RunConfig& cfg) {
    const AlgebraLevel lv = make_level(cfg.level);
    std::vector<int> squares;
    for (const auto& e : lv.generators)
        squares.push_back(as_scalar(e * e) == Bicomplex(1) ? 1 : -1);

    if (cfg.format == "json") {
        json doc;
        doc["level"] = lv.level;
        doc["n"] = lv.n;
        doc["matrix_dim"] = lv.matrix_dim();
        doc["signature"] = {lv.sig_plus, lv.sig_minus};
        doc["generator_squares"] = squares;
        doc["clifford"] = clifford_label(lv);
        const std::string note = level_note(lv.level);
        if (!note.empty()) doc["note"] = note;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "level " << lv.level << ": " << clifford_label(lv) << ", n = " << lv.n
              << ", matrices " << lv.matrix_dim() << "x" << lv.matrix_dim() << "\n";
    std::cout << "paravector signature: (" << lv.sig_plus << "," << lv.sig_minus << ")\n";
    std::cout << "generator squares:";
    for (int s : squares) std::cout << (s > 0 ? " +" : " -");
    std::cout << "\n";
    const std::string note = level_note(lv.level);
    if (!note.empty()) std::cout << note << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const AlgebraLevel lv = make_level(cfg.level);
    std::vector<VerificationReport> reports;

    const bool all = cfg.suite == "all";
    if (all || cfg.suite == "metric") reports.push_back(verify_metric(lv));
    if (all || cfg.suite == "spin") reports.push_back(verify_spin(lv));
    if (all || cfg.suite == "involutions") reports.push_back(verify_involutions(lv));
    if (all || cfg.suite == "lorentz") reports.push_back(verify_lorentz(lv));
    if (all || cfg.suite == "conformal") reports.push_back(verify_conformal(lv));
    if (all || cfg.suite == "reduced") reports.push_back(reduced_spin(lv));

    bool ok = true;
    if (cfg.format == "json") {
        json doc = json::array();
        for (const auto& r : reports) {
            doc.push_back(r.to_json(!cfg.no_timing));
            ok = ok && r.passed();
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            ok = ok && r.passed();
            std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.checks
                      << " checks";
            if (!cfg.no_timing) std::printf("  (%.1f ms)", r.ms);
            std::cout << "\n";
            for (const auto& f : r.failures) {
                std::cout << "      indices (";
                for (size_t k = 0; k < f.indices.size(); ++k)
                    std::cout << (k ? "," : "") << f.indices[k];
                std::cout << "): expected " << f.expected << ", got " << f.actual << "\n";
            }
        }
    }
    return ok ? 0 : 1;
}

int cmd_table(const RunConfig& cfg) {
    const AlgebraLevel lv = make_level(cfg.level);
    const TableFormat fmt = cfg.format == "json" ? TableFormat::json : TableFormat::text;
    try {
        std::cout << render_table(lv, fmt, cfg.word_cap, cfg.unrolled);
    } catch (const NoMatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_demo(const RunConfig& cfg) {
    if (cfg.demo == "massratio") {
        const MassRatioResult r = mass_ratio_deviation();
        if (cfg.format == "json") {
            json doc;
            doc["predicted_ratio"] = r.predicted_ratio;
            doc["deviation_percent"] = r.deviation_percent;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::printf("sqrt(4*pi*exp(4*pi)) = %.4f\n", r.predicted_ratio);
            std::printf("deviation from measured m_p/m_e: %.2f%%\n", r.deviation_percent);
        }
        return 0;
    }

    // harmonic: pullback of x^2 - y^2 under z -> 1/z on a grid away
    // from the origin, checked with the 5-point Laplacian.
    const auto f = [](std::complex<double> z) {
        return z.real() * z.real() - z.imag() * z.imag();
    };
    const MoebiusMap inversion{0, 1, 1, 0};
    const double h = 0.01;
    const int n = 101;
    try {
        const GridField direct = sample_grid(f, n, n, h, 1.0, 1.0);
        const GridField pulled = moebius_pullback(inversion, f, n, n, h, 1.0, 1.0);
        const double base = max_interior(fd_laplacian(direct));
        const double residual = max_interior(fd_laplacian(pulled));
        const GridField pulled2 = moebius_pullback(inversion, f, 2 * n - 1, 2 * n - 1, h / 2, 1.0, 1.0);
        const double residual2 = max_interior(fd_laplacian(pulled2));
        const double ratio = residual / residual2;
        if (cfg.format == "json") {
            json doc;
            doc["h"] = h;
            doc["baseline_max_laplacian"] = base;
            doc["pullback_max_laplacian"] = residual;
            doc["convergence_ratio"] = ratio;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::printf("x^2 - y^2 on [1,2]^2, h = %.3g\n", h);
            std::printf("max |laplacian| of direct sample:      %.3e\n", base);
            std::printf("max |laplacian| of pullback via 1/z:   %.3e\n", residual);
            std::printf("h -> h/2 convergence ratio:            %.2f\n", ratio);
        }
        return ratio >= 3.5 && ratio <= 4.5 ? 0 : 1;
    } catch (const PoleOnGrid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conformal number tower: verification reports, tensor tables, demos"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--max-level", cfg.max_level, "largest allowed level")->capture_default_str();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--level", cfg.level, "tower level")->capture_default_str();
        sub->add_option("--format", cfg.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--tolerance", cfg.tolerance, "float tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "property sampling seed");
        sub->add_flag("--no-timing", cfg.no_timing, "omit timing fields");
    };

    CLI::App* tower = app.add_subcommand("tower", "level metadata");
    add_common(tower);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", cfg.suite, "metric|spin|lorentz|conformal|reduced|involutions|all")
        ->check(CLI::IsMember({"metric", "spin", "lorentz", "conformal", "reduced",
                               "involutions", "all"}));
    add_common(verify);

    CLI::App* table = app.add_subcommand("table", "symbolic sigma table");
    add_common(table);
    table->add_option("--word-cap", cfg.word_cap, "max factors per word")->capture_default_str();
    table->add_flag("--unroll", cfg.unrolled, "decompose over per-slot block units");

    CLI::App* demo = app.add_subcommand("demo", "numeric demonstrations");
    demo->add_option("name", cfg.demo, "harmonic|massratio")
        ->required()
        ->check(CLI::IsMember({"harmonic", "massratio"}));
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cfg.level < 0 || cfg.level > cfg.max_level) {
        std::cerr << "error: level must be in [0, " << cfg.max_level << "]\n";
        return 2;
    }

    try {
        if (tower->parsed()) return cmd_tower(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (demo->parsed()) return cmd_demo(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
