#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qec/channel.hpp"
#include "qec/fidelity.hpp"

#include <nlohmann/json.hpp>

using qec::ChannelParams;
using qec::CodeName;
using qec::Regime;

namespace {

// Test-side oracles: the product-form fidelity expressions in the chain
// shorthands p0, p00, p01, pk0, p11, p33. These are transcribed
// independently of the polynomial tables the library evaluates, so the two
// routes cross-check each other.
struct Vars {
    double p0, p1, p2, p3, p00, p01, p10, p20, p30, p11, p31, p33;
};

Vars vars(const ChannelParams& c) {
    const double p = c.p, mu = c.mu;
    const double ax = c.alphas[0], ay = c.alphas[1], az = c.alphas[2];
    return Vars{1 - p,          ax * p,          ay * p,          az * p,
                (1 - mu) * (1 - p) + mu,          (1 - mu) * (1 - p),
                ax * p * (1 - mu), ay * p * (1 - mu), az * p * (1 - mu),
                ax * p * (1 - mu) + mu, az * p * (1 - mu), az * p * (1 - mu) + mu};
}

double five_product_form(const ChannelParams& c) {
    const Vars v = vars(c);
    const double p00_2 = v.p00 * v.p00, p00_3 = p00_2 * v.p00;
    return p00_3 * v.p00 * v.p0 +
           3.0 * (2.0 * p00_3 * v.p10 * v.p0 + 3.0 * p00_2 * v.p01 * v.p10 * v.p0);
}

double set1_product_form(const ChannelParams& c) {
    const Vars v = vars(c);
    const double p00_2 = v.p00 * v.p00, p00_3 = p00_2 * v.p00, p00_4 = p00_3 * v.p00;
    return p00_4 * p00_2 * v.p0 + 6.0 * p00_4 * v.p00 * v.p10 * v.p0 +
           15.0 * p00_4 * v.p01 * v.p10 * v.p0 + 6.0 * p00_4 * v.p10 * v.p10 * v.p0 +
           24.0 * p00_3 * v.p01 * v.p10 * v.p10 * v.p0 +
           12.0 * p00_2 * v.p01 * v.p01 * v.p10 * v.p10 * v.p0;
}

double set2_product_form(const ChannelParams& c) {
    const Vars v = vars(c);
    const double p00_2 = v.p00 * v.p00, p00_3 = p00_2 * v.p00, p00_4 = p00_3 * v.p00;
    return p00_4 * p00_2 * v.p0 + 6.0 * p00_4 * v.p00 * v.p10 * v.p0 +
           15.0 * p00_4 * v.p01 * v.p10 * v.p0 +
           2.0 * p00_4 * v.p10 * v.p0 * (v.p11 + 2.0 * v.p10) +
           4.0 * p00_3 * v.p01 * v.p10 * v.p0 * (5.0 * v.p10 + v.p11) +
           12.0 * p00_2 * v.p01 * v.p01 * v.p10 * v.p10 * v.p0;
}

double set2_asym_product_form(const ChannelParams& c) {
    const Vars v = vars(c);
    const double p00_2 = v.p00 * v.p00, p00_3 = p00_2 * v.p00, p00_4 = p00_3 * v.p00;
    const double s1 = v.p1 + v.p2 + v.p3;
    const double s10 = v.p10 + v.p20 + v.p30;
    return p00_4 * p00_2 * v.p0 + 2.0 * p00_4 * v.p00 * v.p01 * s1 +
           5.0 * p00_4 * v.p01 * v.p0 * s10 +
           p00_4 * v.p0 * (2.0 * v.p30 * v.p33 + v.p30 * v.p30 + 3.0 * v.p10 * v.p31) +
           p00_3 * v.p01 * v.p30 * v.p0 * (8.0 * v.p30 + 4.0 * v.p33 + 12.0 * v.p10) +
           6.0 * p00_2 * v.p01 * v.p01 * v.p30 * v.p0 * (v.p30 + v.p10);
}

constexpr std::array<double, 3> kFigureAlphas{5.0 / 31.0, 1.0 / 31.0, 25.0 / 31.0};

}  // namespace

TEST_CASE("boundary values of the exact engine") {
    const auto& five = qec::get_code(CodeName::five_qubit);
    for (double mu : {0.0, 0.4, 1.0}) {
        CHECK(qec::entanglement_fidelity_exact(five, ChannelParams::symmetric(0.0, mu))
                  .fidelity_exact == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(qec::entanglement_fidelity_exact(five, ChannelParams::symmetric(1.0, 0.0))
              .fidelity_exact == doctest::Approx(0.0).epsilon(1e-14));
    for (auto name : {CodeName::seven_qubit_set1, CodeName::seven_qubit_set2}) {
        const auto& code = qec::get_code(name);
        CHECK(qec::entanglement_fidelity_exact(code, ChannelParams::symmetric(0.0, 0.7))
                  .fidelity_exact == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(qec::entanglement_fidelity_exact(code, ChannelParams::symmetric(1.0, 0.0))
                  .fidelity_exact == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("five-qubit memoryless pin") {
    const auto& five = qec::get_code(CodeName::five_qubit);
    const auto report =
        qec::entanglement_fidelity_exact(five, ChannelParams::symmetric(0.1, 0.0));
    CHECK(std::abs(report.fidelity_exact - 0.91854) <= 1e-12);
}

TEST_CASE("report bookkeeping") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (auto name : {CodeName::five_qubit, CodeName::seven_qubit_set1, CodeName::seven_qubit_set2}) {
        const auto& code = qec::get_code(name);
        for (int trial = 0; trial < 20; ++trial) {
            const auto params = ChannelParams::symmetric(unif(rng), unif(rng));
            const auto report = qec::entanglement_fidelity_exact(code, params);
            CHECK(report.mass_logical_identity + report.mass_logical_error ==
                  doctest::Approx(1.0).epsilon(1e-12));
            CHECK(report.fidelity_exact == report.mass_logical_identity);
            CHECK(report.failure_probability == 1.0 - report.fidelity_exact);
            CHECK(report.fidelity_closed_form.has_value());
        }
    }
    // The only unpublished combination carries no closed form.
    const auto& set1 = qec::get_code(CodeName::seven_qubit_set1);
    const auto report = qec::entanglement_fidelity_exact(
        set1, ChannelParams::asymmetric(0.05, 0.2, kFigureAlphas));
    CHECK_FALSE(report.fidelity_closed_form.has_value());
    CHECK_THROWS_AS(qec::closed_form(CodeName::seven_qubit_set1, Regime::asymmetric,
                                     ChannelParams::asymmetric(0.05, 0.2, kFigureAlphas)),
                    std::invalid_argument);
}

TEST_CASE("aggregation identity at (mu, p) = (0.2, 0.05)") {
    const auto& five = qec::get_code(CodeName::five_qubit);
    const auto params = ChannelParams::symmetric(0.05, 0.2);
    const auto report = qec::entanglement_fidelity_exact(five, params);

    // Summing joint_prob over exactly the correctable set reproduces the
    // engine value: each member is its own designated correction.
    double direct = 0.0;
    for (const auto& e : five.correctable) {
        std::uint8_t idx[5];
        for (int q = 0; q < 5; ++q) {
            const bool x = (e.a >> q) & 1u, z = (e.b >> q) & 1u;
            idx[q] = x ? (z ? 2 : 1) : (z ? 3 : 0);
        }
        direct += qec::joint_prob(params, idx);
    }
    CHECK(report.fidelity_exact == doctest::Approx(direct).epsilon(1e-14));
    CHECK(std::abs(report.fidelity_exact - 0.953966592) <= 1e-12);
}

TEST_CASE("enumeration totals match the distribution module") {
    const auto& set2 = qec::get_code(CodeName::seven_qubit_set2);
    const auto params = ChannelParams::asymmetric(0.08, 0.35, kFigureAlphas);
    const auto report = qec::entanglement_fidelity_exact(set2, params);
    double member_sum = 0.0;
    for (const auto& entry : qec::enumerate_distribution(params, 7)) {
        if (set2.is_correctable_member(entry.op)) member_sum += entry.probability;
    }
    CHECK(report.fidelity_exact == doctest::Approx(member_sum).epsilon(1e-13));
}

TEST_CASE("polynomial transcriptions agree with the product forms") {
    double worst5 = 0, worst1 = 0, worst2 = 0, worst2a = 0;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const double mu = i / 10.0, p = j / 100.0;
            const auto sym = ChannelParams::symmetric(p, mu);
            worst5 = std::max(worst5, std::abs(qec::closed_form(CodeName::five_qubit,
                                                                Regime::symmetric, sym) -
                                               five_product_form(sym)));
            worst1 = std::max(worst1, std::abs(qec::closed_form(CodeName::seven_qubit_set1,
                                                                Regime::symmetric, sym) -
                                               set1_product_form(sym)));
            worst2 = std::max(worst2, std::abs(qec::closed_form(CodeName::seven_qubit_set2,
                                                                Regime::symmetric, sym) -
                                               set2_product_form(sym)));
            const auto asym = ChannelParams::asymmetric(p, mu, kFigureAlphas);
            worst2a = std::max(worst2a, std::abs(qec::closed_form(CodeName::seven_qubit_set2,
                                                                  Regime::asymmetric, asym) -
                                                 set2_asym_product_form(asym)));
        }
    }
    CHECK(worst5 <= 1e-13);
    CHECK(worst1 <= 1e-13);
    CHECK(worst2 <= 1e-13);
    CHECK(worst2a <= 1e-13);
}

TEST_CASE("asymmetric closed forms at arbitrary alphas") {
    // The asymmetric polynomial depends on alpha only through alpha_z and
    // alpha_z^2 + alpha_x*alpha_z; random alphas confirm no hidden alpha_y
    // dependence beyond the sum constraint.
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unif(0.01, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        double w0 = unif(rng), w1 = unif(rng), w2 = unif(rng);
        const double sum = w0 + w1 + w2;
        const auto params =
            ChannelParams::asymmetric(unif(rng) * 0.3, unif(rng), {w0 / sum, w1 / sum, w2 / sum});
        const double poly = qec::closed_form(CodeName::seven_qubit_set2, Regime::asymmetric, params);
        CHECK(poly == doctest::Approx(set2_asym_product_form(params)).epsilon(1e-12));

        // Five-qubit: asymmetry never changes the value.
        const double away = qec::closed_form(CodeName::five_qubit, Regime::asymmetric, params);
        const auto sym = ChannelParams::symmetric(params.p, params.mu);
        const double home = qec::closed_form(CodeName::five_qubit, Regime::symmetric, sym);
        CHECK(away == doctest::Approx(home).epsilon(1e-13));
    }
}

TEST_CASE("seven-qubit asymmetric mu = 0 limit") {
    const auto params = ChannelParams::asymmetric(0.07, 0.0, kFigureAlphas);
    const double az = kFigureAlphas[2], ax = kFigureAlphas[0];
    const double p = params.p, q = 1 - p;
    const double expected = std::pow(q, 7) + 7 * p * std::pow(q, 6) +
                            21 * p * p * std::pow(q, 5) * (az * az + ax * az);
    CHECK(qec::closed_form(CodeName::seven_qubit_set2, Regime::asymmetric, params) ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("set difference identity") {
    CHECK(qec::set_difference_identity(ChannelParams::symmetric(0.3, 0.0)) == 0.0);
    CHECK(qec::set_difference_identity(ChannelParams::symmetric(0.0, 0.7)) == 0.0);
    const auto params = ChannelParams::symmetric(0.05, 0.1);
    const double rhs = qec::set_difference_identity(params);
    CHECK(std::abs(rhs - 0.006615340276593749) <= 1e-12);
    const double lhs = qec::closed_form(CodeName::seven_qubit_set2, Regime::symmetric, params) -
                       qec::closed_form(CodeName::seven_qubit_set1, Regime::symmetric, params);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
    CHECK(rhs >= 0.0);
    CHECK_THROWS_AS(
        qec::set_difference_identity(ChannelParams::asymmetric(0.05, 0.1, kFigureAlphas)),
        std::invalid_argument);
}

TEST_CASE("unencoded fidelity") {
    CHECK(qec::unencoded_fidelity(ChannelParams::symmetric(0.0, 0.0)) == 1.0);
    CHECK(qec::unencoded_fidelity(ChannelParams::symmetric(1.0, 0.5)) == 0.0);
    CHECK(qec::unencoded_fidelity(ChannelParams::symmetric(0.3, 0.9)) ==
          doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("exact engine is bit-deterministic") {
    const auto& set1 = qec::get_code(CodeName::seven_qubit_set1);
    const auto params = ChannelParams::symmetric(0.123, 0.456);
    const auto a = qec::entanglement_fidelity_exact(set1, params);
    const auto b = qec::entanglement_fidelity_exact(set1, params);
    CHECK(a.fidelity_exact == b.fidelity_exact);
    CHECK(a.mass_logical_error == b.mass_logical_error);
}

TEST_CASE("report serializes every field") {
    const auto& five = qec::get_code(CodeName::five_qubit);
    const auto report =
        qec::entanglement_fidelity_exact(five, ChannelParams::symmetric(0.04, 0.1));
    const auto j = qec::to_json(report);
    CHECK(j["code"] == "five_qubit");
    CHECK(j["params"]["p"] == 0.04);
    CHECK(j["fidelity_exact"].is_number());
    CHECK(j["fidelity_closed_form"].is_number());
    CHECK(j["failure_probability"].is_number());
    CHECK(std::abs(j["fidelity_exact"].get<double>() - 0.9742138567065599) <= 1e-13);
}
