#include "qec/fidelity.hpp"

#include <span>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qec {

namespace {

/// Chain probability shorthands: pk = single-qubit probability of error k,
/// pkj = conditional probability of k given previous error j.
struct ChainVars {
    double p0, p1, p2, p3;
    double p00, p01;
    double p10, p20, p30;
    double p11, p31, p33;
};

ChainVars chain_vars(const ChannelParams& params) {
    const double p = params.p, mu = params.mu;
    const double ax = params.alphas[0], ay = params.alphas[1], az = params.alphas[2];
    ChainVars v{};
    v.p0 = 1.0 - p;
    v.p1 = ax * p;
    v.p2 = ay * p;
    v.p3 = az * p;
    v.p00 = (1.0 - mu) * (1.0 - p) + mu;
    v.p01 = (1.0 - mu) * (1.0 - p);  // = p02 = p03
    v.p10 = ax * p * (1.0 - mu);
    v.p20 = ay * p * (1.0 - mu);
    v.p30 = az * p * (1.0 - mu);
    v.p11 = ax * p * (1.0 - mu) + mu;
    v.p31 = az * p * (1.0 - mu);
    v.p33 = az * p * (1.0 - mu) + mu;
    return v;
}

double horner(std::span<const double> coeffs_high_first, double x) {
    double acc = 0.0;
    for (double c : coeffs_high_first) acc = acc * x + c;
    return acc;
}

/// Five-qubit symmetric fidelity, mu-power coefficients (p^5..p^0).
constexpr double kFive[5][6] = {
    {4, -7, 3, 0, 0, 0},        // mu^4
    {-16, 36, -26, 6, 0, 0},    // mu^3
    {24, -66, 63, -24, 3, 0},   // mu^2
    {-16, 52, -60, 28, -4, 0},  // mu^1
    {4, -15, 20, -10, 0, 1},    // mu^0
};

/// Seven-qubit fidelities: numerators over a common denominator 3,
/// mu-power rows (p^7..p^0).
constexpr double kSet1[7][8] = {
    {4, -3, -5, 4, 0, 0, 0, 0},           // mu^6
    {-24, 50, -22, -12, 8, 0, 0, 0},      // mu^5
    {60, -205, 250, -123, 14, 4, 0, 0},   // mu^4
    {-80, 380, -680, 576, -232, 36, 0, 0},// mu^3
    {60, -365, 835, -930, 530, -145, 15, 0},  // mu^2
    {-24, 178, -490, 660, -460, 154, -18, 0}, // mu^1
    {4, -35, 112, -175, 140, -49, 0, 3},      // mu^0
};

constexpr double kSet2[7][8] = {
    {4, 3, -15, 8, 0, 0, 0, 0},            // mu^6
    {-24, 20, 48, -64, 20, 0, 0, 0},       // mu^5
    {60, -145, 70, 69, -70, 16, 0, 0},     // mu^4
    {-80, 320, -460, 272, -40, -16, 4, 0}, // mu^3
    {60, -335, 705, -710, 350, -75, 5, 0}, // mu^2
    {-24, 172, -460, 600, -400, 124, -12, 0},  // mu^1
    {4, -35, 112, -175, 140, -49, 0, 3},       // mu^0
};

/// Seven-qubit Z-priority asymmetric fidelity. Each mu-power splits into a
/// plain part, a part linear in alpha_z, and a part proportional to
/// (alpha_z^2 + alpha_x*alpha_z); alpha_y enters only through the weight-1
/// terms already folded into the plain part.
constexpr double kAsymPlain[6][8] = {
    {6, -11, 5, 0, 0, 0, 0, 0},            // mu^6
    {-36, 90, -74, 20, 0, 0, 0, 0},        // mu^5
    {90, -285, 330, -165, 30, 0, 0, 0},    // mu^4
    {-120, 460, -680, 480, -160, 20, 0, 0},// mu^3
    {90, -405, 725, -650, 300, -65, 5, 0}, // mu^2
    {-36, 186, -390, 420, -240, 66, -6, 0},// mu^1
};
constexpr double kAsymAlphaZ[6][8] = {
    {0, 6, -10, 4, 0, 0, 0, 0},
    {0, -30, 70, -52, 12, 0, 0, 0},
    {0, 60, -180, 192, -84, 12, 0, 0},
    {0, -60, 220, -304, 192, -52, 4, 0},
    {0, 30, -130, 220, -180, 70, -10, 0},
    {0, -6, 30, -60, 60, -30, 6, 0},
};
constexpr double kAsymZZXZ[6][8] = {
    {-21, 45, -30, 6, 0, 0, 0, 0},
    {126, -330, 300, -108, 12, 0, 0, 0},
    {-315, 975, -1110, 558, -114, 6, 0, 0},
    {420, -1500, 2040, -1296, 372, -36, 0, 0},
    {-315, 1275, -2010, 1530, -555, 75, 0, 0},
    {126, -570, 1020, -900, 390, -66, 0, 0},
};

double five_qubit_symmetric(const ChannelParams& params) {
    double acc = 0.0;
    for (const auto& row : kFive) acc = acc * params.mu + horner(row, params.p);
    return acc;
}

double seven_qubit_symmetric(const double (&table)[7][8], const ChannelParams& params) {
    double acc = 0.0;
    for (const auto& row : table) acc = acc * params.mu + horner(row, params.p) / 3.0;
    return acc;
}

double five_qubit_asymmetric(const ChannelParams& params) {
    const ChainVars v = chain_vars(params);
    const double s10 = v.p10 + v.p20 + v.p30;
    const double s1 = v.p1 + v.p2 + v.p3;
    const double p00_2 = v.p00 * v.p00;
    const double p00_3 = p00_2 * v.p00;
    return p00_3 * v.p00 * v.p0 + p00_3 * v.p0 * s10 + 3.0 * p00_2 * v.p01 * v.p0 * s10 +
           p00_3 * v.p01 * s1;
}

double seven_qubit_asymmetric(const ChannelParams& params) {
    const double p = params.p, mu = params.mu;
    const double az = params.alphas[2];
    const double zz_xz = az * az + params.alphas[0] * az;
    double acc = 0.0;
    for (int r = 0; r < 6; ++r) {
        acc = acc * mu + horner(kAsymPlain[r], p) + az * horner(kAsymAlphaZ[r], p) +
              zz_xz * horner(kAsymZZXZ[r], p);
    }
    const double q = 1.0 - p;
    const double q5 = q * q * q * q * q;
    const double a0 = q5 * q * q + 7.0 * p * q5 * q + 21.0 * p * p * q5 * zz_xz;
    return acc * mu + a0;
}

}  // namespace

std::string_view to_string(Regime regime) {
    return regime == Regime::symmetric ? "symmetric" : "asymmetric";
}

FidelityReport entanglement_fidelity_exact(const CodeSpec& code, const ChannelParams& params) {
    params.validate();
    if (code.n > 10) throw std::invalid_argument("enumeration bound exceeded (n > 10)");

    const double single[4] = {single_prob(params, 0), single_prob(params, 1),
                              single_prob(params, 2), single_prob(params, 3)};
    double cond[4][4];  // cond[j][k] = P(k | previous j)
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) cond[j][k] = conditional_prob(params, k, j);

    double identity_mass = 0.0;
    double error_mass = 0.0;
    const int n = code.n;

    // Depth-first walk over all 4^n index strings; prefix probabilities are
    // reused across the subtree below each qubit.
    struct Walker {
        const CodeSpec& code;
        const double (&cond)[4][4];
        int n;
        double& identity_mass;
        double& error_mass;

        void descend(int qubit, int prev, double prob, std::uint32_t a, std::uint32_t b) {
            if (qubit == n) {
                if (code.correctable_mask[a | (b << n)]) {
                    identity_mass += prob;
                } else {
                    error_mass += prob;
                }
                return;
            }
            const std::uint32_t bit = 1u << qubit;
            descend(qubit + 1, 0, prob * cond[prev][0], a, b);
            descend(qubit + 1, 1, prob * cond[prev][1], a | bit, b);
            descend(qubit + 1, 2, prob * cond[prev][2], a | bit, b | bit);
            descend(qubit + 1, 3, prob * cond[prev][3], a, b | bit);
        }
    } walker{code, cond, n, identity_mass, error_mass};

    for (int k0 = 0; k0 < 4; ++k0) {
        const std::uint32_t abit = (k0 == 1 || k0 == 2) ? 1u : 0u;
        const std::uint32_t bbit = (k0 == 2 || k0 == 3) ? 1u : 0u;
        walker.descend(1, k0, single[k0], abit, bbit);
    }

    FidelityReport report;
    report.code_name = code.name;
    report.params = params;
    report.fidelity_exact = identity_mass;
    report.failure_probability = 1.0 - identity_mass;
    report.mass_logical_identity = identity_mass;
    report.mass_logical_error = error_mass;
    const Regime regime = params.is_symmetric() ? Regime::symmetric : Regime::asymmetric;
    const CodeName name = code_name_from_string(code.name);
    if (!(name == CodeName::seven_qubit_set1 && regime == Regime::asymmetric)) {
        report.fidelity_closed_form = closed_form(name, regime, params);
    }
    return report;
}

double closed_form(CodeName name, Regime regime, const ChannelParams& params) {
    params.validate();
    switch (name) {
        case CodeName::five_qubit:
            return regime == Regime::symmetric ? five_qubit_symmetric(params)
                                               : five_qubit_asymmetric(params);
        case CodeName::seven_qubit_set1:
            if (regime == Regime::asymmetric) {
                throw std::invalid_argument(
                    "no published closed form for seven_qubit_set1 in the asymmetric regime; "
                    "use the enumeration engine");
            }
            return seven_qubit_symmetric(kSet1, params);
        case CodeName::seven_qubit_set2:
            return regime == Regime::symmetric ? seven_qubit_symmetric(kSet2, params)
                                               : seven_qubit_asymmetric(params);
    }
    throw std::logic_error("unreachable code name");
}

double set_difference_identity(const ChannelParams& params) {
    params.validate();
    if (!params.is_symmetric()) {
        throw std::invalid_argument("the set difference identity holds in the symmetric regime");
    }
    const ChainVars v = chain_vars(params);
    const double p00_3 = v.p00 * v.p00 * v.p00;
    return params.mu * (2.0 * p00_3 * v.p00 * v.p10 * v.p0 + 4.0 * p00_3 * v.p01 * v.p10 * v.p0);
}

double unencoded_fidelity(const ChannelParams& params) {
    params.validate();
    return 1.0 - params.p;
}

nlohmann::json to_json(const FidelityReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["code"] = report.code_name;
    j["params"] = {{"p", report.params.p},
                   {"mu", report.params.mu},
                   {"alpha_x", report.params.alphas[0]},
                   {"alpha_y", report.params.alphas[1]},
                   {"alpha_z", report.params.alphas[2]}};
    j["fidelity_exact"] = report.fidelity_exact;
    if (report.fidelity_closed_form) {
        j["fidelity_closed_form"] = *report.fidelity_closed_form;
    } else {
        j["fidelity_closed_form"] = nullptr;
    }
    j["failure_probability"] = report.failure_probability;
    j["mass_logical_identity"] = report.mass_logical_identity;
    j["mass_logical_error"] = report.mass_logical_error;
    return j;
}

}  // namespace qec
