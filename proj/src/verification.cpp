#include "qec/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string_view>

#include "qec/channel.hpp"
#include "qec/code.hpp"
#include "qec/dense.hpp"
#include "qec/fidelity.hpp"
#include "qec/threshold.hpp"

namespace qec {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

/// The shared verification grid: mu in {0, 0.1, ..., 1.0}, p in
/// {0, 0.01, ..., 0.2}, 231 points.
struct GridPoint {
    double mu, p;
};

std::vector<GridPoint> verification_grid() {
    std::vector<GridPoint> grid;
    grid.reserve(231);
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 20; ++j) {
            grid.push_back({i / 10.0, j / 100.0});
        }
    }
    return grid;
}

constexpr Alphas kFigureAlphas{5.0 / 31.0, 1.0 / 31.0, 25.0 / 31.0};

CheckResult oracle_equivalence(std::string name, CodeName code_name, Regime regime,
                               const Alphas& alphas) {
    const CodeSpec& code = get_code(code_name);
    double worst = 0.0;
    for (const auto& [mu, p] : verification_grid()) {
        const ChannelParams params{p, mu, alphas};
        const double exact = entanglement_fidelity_exact(code, params).fidelity_exact;
        const double closed = closed_form(code_name, regime, params);
        worst = std::max(worst, std::abs(exact - closed));
    }
    return {std::move(name), worst <= 1e-12,
            "max |exact - closed| = " + fmt(worst) + " over 231 grid points"};
}

double horner(std::span<const double> coeffs_high_first, double x) {
    double acc = 0.0;
    for (double c : coeffs_high_first) acc = acc * x + c;
    return acc;
}

CheckResult mu0_pin(std::string name, CodeName code_name, std::span<const double> numerators,
                    double denominator) {
    const CodeSpec& code = get_code(code_name);
    double worst = 0.0;
    for (int j = 1; j <= 20; ++j) {
        const double p = j / 100.0;
        const ChannelParams params = ChannelParams::symmetric(p, 0.0);
        const double exact = entanglement_fidelity_exact(code, params).fidelity_exact;
        const double poly = horner(numerators, p) / denominator;
        worst = std::max(worst, std::abs(exact - poly));
    }
    return {std::move(name), worst <= 1e-12,
            "max |enumeration - mu=0 polynomial| = " + fmt(worst) + " at 20 p-values"};
}

CheckResult pin_value(std::string name, double got, double want, double tol) {
    return {std::move(name), std::abs(got - want) <= tol,
            "got " + fmt(got) + ", want " + fmt(want) + " +/- " + fmt(tol)};
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks() {
    std::vector<CheckResult> results;
    const auto grid = verification_grid();
    const CodeSpec& five = get_code(CodeName::five_qubit);
    const CodeSpec& set1 = get_code(CodeName::seven_qubit_set1);
    const CodeSpec& set2 = get_code(CodeName::seven_qubit_set2);

    // --- 1. oracle equivalence: enumeration vs published closed forms ---
    results.push_back(oracle_equivalence("oracle_equivalence.five_qubit_symmetric",
                                         CodeName::five_qubit, Regime::symmetric,
                                         kSymmetricAlphas));
    results.push_back(oracle_equivalence("oracle_equivalence.set1_symmetric",
                                         CodeName::seven_qubit_set1, Regime::symmetric,
                                         kSymmetricAlphas));
    results.push_back(oracle_equivalence("oracle_equivalence.set2_symmetric",
                                         CodeName::seven_qubit_set2, Regime::symmetric,
                                         kSymmetricAlphas));
    results.push_back(oracle_equivalence("oracle_equivalence.set2_asymmetric",
                                         CodeName::seven_qubit_set2, Regime::asymmetric,
                                         kFigureAlphas));

    // --- 2. mu = 0 polynomial pins ---
    {
        constexpr double five_mu0[] = {4, -15, 20, -10, 0, 1};
        constexpr double seven_mu0[] = {4, -35, 112, -175, 140, -49, 0, 3};
        results.push_back(mu0_pin("mu0_polynomial.five_qubit", CodeName::five_qubit, five_mu0, 1.0));
        results.push_back(
            mu0_pin("mu0_polynomial.seven_qubit", CodeName::seven_qubit_set1, seven_mu0, 3.0));
    }

    // --- 3. threshold pins ---
    results.push_back(pin_value("threshold.seven_set1_p_at_mu0",
                                p_threshold_at_mu(set1, kSymmetricAlphas, 0.0), 7.63e-2, 5e-4));
    results.push_back(pin_value("threshold.seven_set2_p_at_mu0",
                                p_threshold_at_mu(set2, kSymmetricAlphas, 0.0), 7.63e-2, 5e-4));
    results.push_back(pin_value("threshold.set2_p_at_mu029",
                                p_threshold_at_mu(set2, kSymmetricAlphas, 0.29), 1.95e-3, 2e-4));
    results.push_back(pin_value("threshold.max_mu_set1", max_effective_mu(set1, kSymmetricAlphas),
                                0.199, 0.005));
    results.push_back(pin_value("threshold.max_mu_set2", max_effective_mu(set2, kSymmetricAlphas),
                                0.29, 0.01));
    results.push_back(pin_value("threshold.max_mu_five", max_effective_mu(five, kSymmetricAlphas),
                                0.33, 0.01));

    // --- 4. set-difference identity ---
    {
        double worst = 0.0;
        bool nonnegative = true;
        for (const auto& [mu, p] : grid) {
            const ChannelParams params = ChannelParams::symmetric(p, mu);
            const double lhs = closed_form(CodeName::seven_qubit_set2, Regime::symmetric, params) -
                               closed_form(CodeName::seven_qubit_set1, Regime::symmetric, params);
            const double rhs = set_difference_identity(params);
            worst = std::max(worst, std::abs(lhs - rhs));
            if (rhs < 0.0) nonnegative = false;
        }
        results.push_back({"set_difference_identity", worst <= 1e-12 && nonnegative,
                           "max |closed(set2)-closed(set1) - identity| = " + fmt(worst) +
                               (nonnegative ? ", rhs >= 0" : ", rhs went negative")});
    }

    // --- 5. five-qubit asymmetry invariance ---
    {
        std::mt19937 rng(20250811);
        std::uniform_real_distribution<double> unif(0.05, 1.0);
        double worst = 0.0;
        std::vector<double> symmetric_value(grid.size());
        for (std::size_t g = 0; g < grid.size(); ++g) {
            const ChannelParams params = ChannelParams::symmetric(grid[g].p, grid[g].mu);
            symmetric_value[g] = entanglement_fidelity_exact(five, params).fidelity_exact;
        }
        for (int trial = 0; trial < 10; ++trial) {
            double w0 = unif(rng), w1 = unif(rng), w2 = unif(rng);
            const double sum = w0 + w1 + w2;
            const Alphas alphas{w0 / sum, w1 / sum, w2 / sum};
            for (std::size_t g = 0; g < grid.size(); ++g) {
                const ChannelParams params{grid[g].p, grid[g].mu, alphas};
                const double value = entanglement_fidelity_exact(five, params).fidelity_exact;
                worst = std::max(worst, std::abs(value - symmetric_value[g]));
            }
        }
        results.push_back({"five_qubit_asymmetry_invariance", worst <= 1e-12,
                           "max |F(alpha) - F(symmetric)| = " + fmt(worst) +
                               " over 10 random alpha triples x 231 grid points"});
    }

    // --- 6. Knill-Laflamme suite ---
    {
        const KlReport r5 = check_kl_conditions(CodeName::five_qubit, five.correctable);
        results.push_back({"kl.five_qubit_16set", r5.pass,
                           std::to_string(r5.violations.size()) + " violations over " +
                               std::to_string(r5.pairs_checked) + " pairs"});
        const KlReport r1 = check_kl_conditions(CodeName::seven_qubit_set1, set1.correctable);
        results.push_back({"kl.seven_qubit_set1", r1.pass,
                           std::to_string(r1.violations.size()) + " violations over " +
                               std::to_string(r1.pairs_checked) + " pairs"});
        const KlReport r2 = check_kl_conditions(CodeName::seven_qubit_set2, set2.correctable);
        std::string detail = std::to_string(r2.violations.size()) + " violations over " +
                             std::to_string(r2.pairs_checked) + " pairs";
        if (!r2.pass) {
            // Expected on mathematical grounds: each ZZ pair shares its
            // syndrome with a single-Z error, and their product is a weight-3
            // logical Z, so the diagonal entries split to +1/-1. Reported
            // honestly as a failure of the published construction.
            detail += "; first: <i|" + to_string(r2.violations[0].first) + "*" +
                      to_string(r2.violations[0].second) + "|i> = " +
                      fmt(r2.violations[0].diag0.real()) + " vs " +
                      fmt(r2.violations[0].diag1.real()) +
                      " (Z-priority set is not strictly correctable)";
        }
        results.push_back({"kl.seven_qubit_set2", r2.pass, std::move(detail)});

        const std::array<PauliString, 2> counter{PauliString::identity(7),
                                                 parse_pauli(7, "X1X2X3")};
        const KlReport rc = check_kl_conditions(CodeName::seven_qubit_set1, counter);
        bool overlap_is_one = false;
        for (const auto& v : rc.violations) {
            if (std::abs(std::abs(v.off01) - 1.0) <= 1e-12) overlap_is_one = true;
        }
        results.push_back({"kl.counterexample_x1x2x3", !rc.pass && overlap_is_one,
                           "must fail with |<0_L|X1X2X3|1_L>| = 1: " +
                               std::string(!rc.pass ? "failed" : "passed") + ", overlap hit 1: " +
                               (overlap_is_one ? "yes" : "no")});
    }

    // --- 7. golden syndrome tables ---
    {
        struct Golden {
            std::string_view pauli, syndrome;
        };
        static constexpr Golden kFiveGolden[] = {
            {"I", "0000"},  {"X1", "1000"}, {"X2", "1100"}, {"X3", "0110"},
            {"X4", "0011"}, {"X5", "0001"}, {"Z1", "0101"}, {"Z2", "0010"},
            {"Z3", "1001"}, {"Z4", "0100"}, {"Z5", "1010"}, {"Y1", "1101"},
            {"Y2", "1110"}, {"Y3", "1111"}, {"Y4", "0111"}, {"Y5", "1011"},
        };
        static constexpr Golden kSevenGolden[] = {
            {"I", "000000"},    {"X1", "111000"},   {"X2", "110000"},   {"X3", "101000"},
            {"X4", "100000"},   {"X5", "011000"},   {"X6", "010000"},   {"X7", "001000"},
            {"Y1", "111111"},   {"Y2", "110110"},   {"Y3", "101101"},   {"Y4", "100100"},
            {"Y5", "011011"},   {"Y6", "010010"},   {"Y7", "001001"},   {"Z1", "000111"},
            {"Z2", "000110"},   {"Z3", "000101"},   {"Z4", "000100"},   {"Z5", "000011"},
            {"Z6", "000010"},   {"Z7", "000001"},   {"X1Z2", "111110"}, {"X1Z3", "111101"},
            {"X1Z4", "111100"}, {"X1Z5", "111011"}, {"X1Z6", "111010"}, {"X1Z7", "111001"},
            {"Z1X2", "110111"}, {"X2Z3", "110101"}, {"X2Z4", "110100"}, {"X2Z5", "110011"},
            {"X2Z6", "110010"}, {"X2Z7", "110001"}, {"Z1X3", "101111"}, {"Z2X3", "101110"},
            {"X3Z4", "101100"}, {"X3Z5", "101011"}, {"X3Z6", "101010"}, {"X3Z7", "101001"},
            {"Z1X4", "100111"}, {"Z2X4", "100110"}, {"Z3X4", "100101"}, {"X4Z5", "100011"},
            {"X4Z6", "100010"}, {"X4Z7", "100001"}, {"Z1X5", "011111"}, {"Z2X5", "011110"},
            {"Z3X5", "011101"}, {"Z4X5", "011100"}, {"X5Z6", "011010"}, {"X5Z7", "011001"},
            {"Z1X6", "010111"}, {"Z2X6", "010110"}, {"Z3X6", "010101"}, {"Z4X6", "010100"},
            {"Z5X6", "010011"}, {"X6Z7", "010001"}, {"Z1X7", "001111"}, {"Z2X7", "001110"},
            {"Z3X7", "001101"}, {"Z4X7", "001100"}, {"Z5X7", "001011"}, {"Z6X7", "001010"},
        };
        int bad5 = 0;
        for (const auto& g : kFiveGolden) {
            if (syndrome_of(five, parse_pauli(5, g.pauli)).to_string() != g.syndrome) ++bad5;
        }
        results.push_back({"syndrome_golden.five_qubit", bad5 == 0,
                           std::to_string(std::size(kFiveGolden) - bad5) + "/" +
                               std::to_string(std::size(kFiveGolden)) + " table entries match"});
        int bad7 = 0;
        for (const auto& g : kSevenGolden) {
            if (syndrome_of(set1, parse_pauli(7, g.pauli)).to_string() != g.syndrome) ++bad7;
        }
        results.push_back({"syndrome_golden.seven_qubit", bad7 == 0,
                           std::to_string(std::size(kSevenGolden) - bad7) + "/" +
                               std::to_string(std::size(kSevenGolden)) + " table entries match"});
    }

    // --- 8. structural counts and normalization ---
    {
        bool counts_ok = true;
        std::string detail;
        for (int n : {5, 7}) {
            const auto dist = enumerate_distribution(ChannelParams::symmetric(0.1, 0.3), n);
            if (dist.size() != (std::size_t{1} << (2 * n))) counts_ok = false;
            std::vector<std::size_t> by_weight(static_cast<std::size_t>(n + 1), 0);
            for (const auto& e : dist) ++by_weight[static_cast<std::size_t>(weight(e.op))];
            double binom = 1.0;
            double pow3 = 1.0;
            for (int m = 0; m <= n; ++m) {
                if (m > 0) {
                    binom = binom * (n - m + 1) / m;
                    pow3 *= 3.0;
                }
                if (by_weight[static_cast<std::size_t>(m)] !=
                    static_cast<std::size_t>(std::llround(pow3 * binom))) {
                    counts_ok = false;
                }
            }
            detail += "n=" + std::to_string(n) + ": " + std::to_string(dist.size()) + " strings; ";
        }
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double worst = 0.0;
        for (int draw = 0; draw < 50; ++draw) {
            double w0 = unif(rng) + 1e-3, w1 = unif(rng) + 1e-3, w2 = unif(rng) + 1e-3;
            const double sum = w0 + w1 + w2;
            const ChannelParams params{unif(rng), unif(rng), {w0 / sum, w1 / sum, w2 / sum}};
            for (int n : {5, 7}) {
                double total = 0.0;
                for (const auto& e : enumerate_distribution(params, n)) total += e.probability;
                worst = std::max(worst, std::abs(total - 1.0));
            }
        }
        results.push_back({"structural_counts", counts_ok && worst <= 1e-12,
                           detail + "worst |sum - 1| = " + fmt(worst) + " over 50 draws"});
    }

    // --- 9. ordering properties ---
    {
        bool ok = true;
        double margin = 0.0;
        for (const auto& [mu, p] : grid) {
            if (mu <= 0.0) continue;
            const ChannelParams params = ChannelParams::symmetric(p, mu);
            const double f2 = entanglement_fidelity_exact(set2, params).fidelity_exact;
            const double f1 = entanglement_fidelity_exact(set1, params).fidelity_exact;
            if (f2 < f1) {
                ok = false;
                margin = std::min(margin, f2 - f1);
            }
        }
        results.push_back({"ordering.set2_dominates_set1", ok,
                           ok ? "F_set2 >= F_set1 at all grid points with mu > 0"
                              : "violated by " + fmt(-margin)});
    }
    {
        bool ok = true;
        for (const CodeSpec* code : {&five, &set1, &set2}) {
            std::array<double, 21> base{};
            for (int j = 0; j <= 20; ++j) {
                const ChannelParams params = ChannelParams::symmetric(j / 100.0, 0.0);
                base[static_cast<std::size_t>(j)] =
                    entanglement_fidelity_exact(*code, params).fidelity_exact;
            }
            for (const auto& [mu, p] : grid) {
                if (mu <= 0.0) continue;
                const ChannelParams params = ChannelParams::symmetric(p, mu);
                const auto report = entanglement_fidelity_exact(*code, params);
                // The effectiveness region is open; at mu = 1 the failure
                // probability equals p identically and rounding decides the
                // strict comparison, so points are classified as inside only
                // with a margin beyond roundoff.
                if (!(report.failure_probability < p - 1e-12)) continue;
                if (report.fidelity_exact >
                    base[static_cast<std::size_t>(std::lround(p * 100))] + 1e-15) {
                    ok = false;
                }
            }
        }
        results.push_back({"ordering.correlations_never_help", ok,
                           "F(mu,p) <= F(0,p) inside effectiveness regions: " +
                               std::string(ok ? "holds" : "violated")});
    }
    {
        bool ok = true;
        std::vector<double> mu_grid(40);
        for (std::size_t i = 0; i < mu_grid.size(); ++i) {
            mu_grid[i] = 0.199 * static_cast<double>(i) / (mu_grid.size() - 1);
        }
        const auto asym7 = fidelity_sweep(set2, kFigureAlphas, 4e-2, mu_grid);
        const auto five_sym = fidelity_sweep(five, kSymmetricAlphas, 4e-2, mu_grid);
        const auto sym7 = fidelity_sweep(set2, kSymmetricAlphas, 4e-2, mu_grid);
        for (std::size_t i = 0; i < mu_grid.size(); ++i) {
            if (asym7[i].fidelity < five_sym[i].fidelity - 1e-15) ok = false;
            if (five_sym[i].fidelity < sym7[i].fidelity - 1e-15) ok = false;
        }
        results.push_back({"ordering.figure6_pointwise", ok,
                           "F_asym7 >= F_five >= F_sym7 at p = 4e-2 on mu in [0, 0.199]: " +
                               std::string(ok ? "holds" : "violated")});
    }

    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace qec
