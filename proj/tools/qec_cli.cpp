// Command-line surface: exact fidelities, oracle verification, threshold
// curves, figure data regeneration, and code table export.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qec/channel.hpp"
#include "qec/code.hpp"
#include "qec/fidelity.hpp"
#include "qec/threshold.hpp"
#include "qec/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

constexpr qec::Alphas kFigureAlphas{5.0 / 31.0, 1.0 / 31.0, 25.0 / 31.0};

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct AlphaOptions {
    double x = 1.0 / 3.0, y = 1.0 / 3.0, z = 1.0 / 3.0;
    bool any_set = false;
};

void add_alpha_options(CLI::App* cmd, AlphaOptions& alphas) {
    auto* ox = cmd->add_option("--alpha-x", alphas.x, "X share of the error probability");
    auto* oy = cmd->add_option("--alpha-y", alphas.y, "Y share of the error probability");
    auto* oz = cmd->add_option("--alpha-z", alphas.z, "Z share of the error probability");
    ox->needs(oy)->needs(oz);
    oy->needs(ox)->needs(oz);
    oz->needs(ox)->needs(oy);
    cmd->callback([&alphas, ox] { alphas.any_set = ox->count() > 0; });
}

qec::Alphas resolve_alphas(const AlphaOptions& alphas) {
    if (!alphas.any_set) return qec::kSymmetricAlphas;
    const double sum = alphas.x + alphas.y + alphas.z;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw CLI::ValidationError("--alpha-x/y/z must sum to 1 (got " + g17(sum) + ")");
    }
    // Renormalize the sub-1e-9 slack so ChannelParams validation is exact.
    return qec::Alphas{alphas.x / sum, alphas.y / sum, alphas.z / sum};
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

void write_multi_threshold_csv(std::ostream& out, std::span<const qec::ThresholdCurve> curves) {
    out << "# schema=1\n";
    out << "curve,p,mu_threshold\n";
    for (const auto& curve : curves) {
        const std::string label = curve.code_name + ":" + curve.regime;
        for (const auto& [p, mu] : curve.samples) {
            out << label << ',' << g17(p) << ',' << g17(mu) << '\n';
        }
    }
}

struct LabeledSweep {
    std::string label;
    std::vector<qec::SweepRow> rows;
};

void write_multi_sweep_csv(std::ostream& out, std::span<const LabeledSweep> sweeps) {
    out << "# schema=1\n";
    out << "curve,mu,fidelity\n";
    for (const auto& sweep : sweeps) {
        for (const auto& row : sweep.rows) {
            out << sweep.label << ',' << g17(row.mu) << ',' << g17(row.fidelity) << '\n';
        }
    }
}

int run_fidelity(const std::string& code_text, double p, double mu, const AlphaOptions& alphas) {
    const qec::CodeName name = qec::code_name_from_string(code_text);
    const qec::ChannelParams params{p, mu, resolve_alphas(alphas)};
    params.validate();
    const qec::FidelityReport report =
        qec::entanglement_fidelity_exact(qec::get_code(name), params);
    std::cout << qec::to_json(report).dump(2) << '\n';
    if (report.fidelity_closed_form &&
        std::abs(report.fidelity_exact - *report.fidelity_closed_form) > 1e-9) {
        std::cerr << "error: enumeration and closed form disagree by "
                  << g17(std::abs(report.fidelity_exact - *report.fidelity_closed_form)) << '\n';
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int run_verify() {
    const auto results = qec::run_acceptance_checks();
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    }
    const std::size_t failed =
        static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                               [](const auto& r) { return !r.pass; }));
    std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
              << " (" << results.size() << " total)\n";
    return failed == 0 ? kExitOk : kExitVerificationFailure;
}

int run_threshold(const std::string& code_text, const AlphaOptions& alphas,
                  std::optional<double> mu, bool curve, double p_min, double p_max, int p_points,
                  const std::string& out_path) {
    const qec::CodeSpec& code = qec::get_code(qec::code_name_from_string(code_text));
    const qec::Alphas a = resolve_alphas(alphas);
    if (mu.has_value() == curve) {
        throw CLI::ValidationError("pass exactly one of --mu or --curve");
    }
    if (mu) {
        nlohmann::json j;
        j["schema"] = 1;
        j["code"] = code.name;
        j["mu"] = *mu;
        j["p_threshold"] = qec::p_threshold_at_mu(code, a, *mu);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::vector<double> grid(static_cast<std::size_t>(p_points));
    for (int i = 0; i < p_points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            p_min * std::exp(std::log(p_max / p_min) * i / (p_points - 1));
    }
    const qec::ThresholdCurve result = qec::mu_threshold_curve(code, a, grid);
    if (out_path.empty()) {
        qec::write_threshold_csv(std::cout, result);
    } else {
        std::ofstream out(out_path);
        if (!out) throw CLI::ValidationError("cannot open " + out_path);
        qec::write_threshold_csv(out, result);
    }
    return kExitOk;
}

int run_figures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const qec::CodeSpec& five = qec::get_code(qec::CodeName::five_qubit);
    const qec::CodeSpec& set1 = qec::get_code(qec::CodeName::seven_qubit_set1);
    const qec::CodeSpec& set2 = qec::get_code(qec::CodeName::seven_qubit_set2);
    const std::vector<double> p_grid = qec::default_p_grid();
    nlohmann::json manifest;
    manifest["schema"] = 1;

    auto open = [&](const std::string& name) {
        std::ofstream out(fs::path(out_dir) / name);
        if (!out) throw CLI::ValidationError("cannot write to " + out_dir);
        return out;
    };

    {  // fig1: five-qubit symmetric threshold curve
        auto curve = qec::mu_threshold_curve(five, qec::kSymmetricAlphas, p_grid);
        auto out = open("fig1.csv");
        qec::write_threshold_csv(out, curve);
        manifest["figures"]["fig1"] = {{"file", "fig1.csv"},
                                       {"curves", {"five_qubit:symmetric"}},
                                       {"columns", "p,mu_threshold"}};
    }
    const std::array<double, 3> fig2_ps{4.33e-2, 4.0e-2, 3.67e-2};
    {  // fig2: five-qubit fidelity vs mu at three p values
        std::vector<LabeledSweep> sweeps;
        const auto mu_grid = linear_grid(0.0, 0.33, 34);
        for (double p : fig2_ps) {
            sweeps.push_back({"five_qubit:p=" + g17(p),
                              qec::fidelity_sweep(five, qec::kSymmetricAlphas, p, mu_grid)});
        }
        auto out = open("fig2.csv");
        write_multi_sweep_csv(out, sweeps);
        manifest["figures"]["fig2"] = {{"file", "fig2.csv"},
                                       {"p_values", fig2_ps},
                                       {"columns", "curve,mu,fidelity"}};
    }
    {  // fig3: seven-qubit (standard table) fidelity vs mu
        std::vector<LabeledSweep> sweeps;
        const auto mu_grid = linear_grid(0.0, 0.199, 40);
        for (double p : fig2_ps) {
            sweeps.push_back({"seven_qubit_set1:p=" + g17(p),
                              qec::fidelity_sweep(set1, qec::kSymmetricAlphas, p, mu_grid)});
        }
        auto out = open("fig3.csv");
        write_multi_sweep_csv(out, sweeps);
        manifest["figures"]["fig3"] = {{"file", "fig3.csv"},
                                       {"p_values", fig2_ps},
                                       {"columns", "curve,mu,fidelity"}};
    }
    {  // fig4: symmetric threshold curves for all three tables
        std::vector<qec::ThresholdCurve> curves;
        curves.push_back(qec::mu_threshold_curve(five, qec::kSymmetricAlphas, p_grid));
        curves.push_back(qec::mu_threshold_curve(set2, qec::kSymmetricAlphas, p_grid));
        curves.push_back(qec::mu_threshold_curve(set1, qec::kSymmetricAlphas, p_grid));
        auto out = open("fig4.csv");
        write_multi_threshold_csv(out, curves);
        manifest["figures"]["fig4"] = {{"file", "fig4.csv"},
                                       {"columns", "curve,p,mu_threshold"}};
    }
    {  // fig5: asymmetric threshold curves (alpha_z = 25/31, alpha_x = 5/31)
        std::vector<qec::ThresholdCurve> curves;
        curves.push_back(qec::mu_threshold_curve(set2, kFigureAlphas, p_grid));
        curves.push_back(qec::mu_threshold_curve(five, kFigureAlphas, p_grid));
        auto out = open("fig5.csv");
        write_multi_threshold_csv(out, curves);
        manifest["figures"]["fig5"] = {{"file", "fig5.csv"},
                                       {"alphas", kFigureAlphas},
                                       {"columns", "curve,p,mu_threshold"}};
    }
    {  // fig6: three-curve fidelity comparison at p = 4e-2
        const auto mu_grid = linear_grid(0.0, 0.199, 40);
        std::vector<LabeledSweep> sweeps;
        sweeps.push_back({"seven_qubit_set2:asymmetric",
                          qec::fidelity_sweep(set2, kFigureAlphas, 4e-2, mu_grid)});
        sweeps.push_back({"five_qubit:symmetric",
                          qec::fidelity_sweep(five, qec::kSymmetricAlphas, 4e-2, mu_grid)});
        sweeps.push_back({"seven_qubit_set2:symmetric",
                          qec::fidelity_sweep(set2, qec::kSymmetricAlphas, 4e-2, mu_grid)});
        auto out = open("fig6.csv");
        write_multi_sweep_csv(out, sweeps);
        manifest["figures"]["fig6"] = {{"file", "fig6.csv"},
                                       {"p", 4e-2},
                                       {"alphas", kFigureAlphas},
                                       {"columns", "curve,mu,fidelity"}};
    }
    auto out = open("manifest.json");
    out << manifest.dump(2) << '\n';
    return kExitOk;
}

int run_dump_code(const std::string& code_text, const std::string& out_path) {
    const qec::CodeSpec& code = qec::get_code(qec::code_name_from_string(code_text));
    const nlohmann::json j = qec::to_json(code);
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw CLI::ValidationError("cannot open " + out_path);
        out << j.dump(2) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stabilizer-code analysis for correlated and asymmetric depolarizing noise"};
    app.require_subcommand(1);

    std::string code_text = "five";
    double p = 0.0, mu = 0.0;
    AlphaOptions alphas;

    auto* fid = app.add_subcommand("fidelity", "Exact + closed-form entanglement fidelity (JSON)");
    fid->add_option("--code", code_text, "five|set1|set2")->required();
    fid->add_option("--p", p, "error probability")->required();
    fid->add_option("--mu", mu, "degree of memory")->required();
    add_alpha_options(fid, alphas);

    auto* ver = app.add_subcommand("verify", "Run the full verification suite");
    bool verify_all = false;
    ver->add_flag("--all", verify_all, "run every check (default)");

    auto* thr = app.add_subcommand("threshold", "Effectiveness thresholds");
    std::optional<double> thr_mu;
    bool thr_curve = false;
    double p_min = 1e-4, p_max = 2e-1;
    int p_points = 200;
    std::string out_path;
    thr->add_option("--code", code_text, "five|set1|set2")->required();
    thr->add_option("--mu", thr_mu, "report p_threshold at this mu");
    thr->add_flag("--curve", thr_curve, "emit the mu_threshold(p) curve as CSV");
    thr->add_option("--p-min", p_min, "curve grid start")->check(CLI::PositiveNumber);
    thr->add_option("--p-max", p_max, "curve grid end")->check(CLI::PositiveNumber);
    thr->add_option("--p-points", p_points, "curve grid size")->check(CLI::Range(2, 100000));
    thr->add_option("--out", out_path, "output CSV path (default stdout)");
    add_alpha_options(thr, alphas);

    auto* figs = app.add_subcommand("figures", "Regenerate the figure data files");
    std::string fig_dir;
    figs->add_option("--out", fig_dir, "output directory")->required();

    auto* dump = app.add_subcommand("dump-code", "Export a code table as JSON");
    dump->add_option("--code", code_text, "five|set1|set2")->required();
    dump->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (fid->parsed()) return run_fidelity(code_text, p, mu, alphas);
        if (ver->parsed()) return run_verify();
        if (thr->parsed()) {
            return run_threshold(code_text, alphas, thr_mu, thr_curve, p_min, p_max, p_points,
                                 out_path);
        }
        if (figs->parsed()) return run_figures(fig_dir);
        if (dump->parsed()) return run_dump_code(code_text, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
