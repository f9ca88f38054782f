#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qec/channel.hpp"
#include "qec/code.hpp"

namespace qec {

enum class Regime { symmetric, asymmetric };

std::string_view to_string(Regime regime);

/// Result of one exact fidelity evaluation.
///
/// fidelity_exact is the probability that the channel's error string is
/// exactly undone by its designated correction (net operation = identity on
/// the code space); this is the quantity the closed forms express. Strings
/// whose correction leaves a nonidentity net operator count as logical
/// error mass, including zero-syndrome strings that merely land in the
/// stabilizer group.
struct FidelityReport {
    std::string code_name;
    ChannelParams params;
    double fidelity_exact = 0.0;
    std::optional<double> fidelity_closed_form;  // absent where none is published
    double failure_probability = 0.0;            // 1 - fidelity_exact
    double mass_logical_identity = 0.0;
    double mass_logical_error = 0.0;
};

/// Exact entanglement fidelity by weighted enumeration of all 4^n error
/// strings: each string's probability accrues to the identity mass iff the
/// string is one of the code's designated correctable representatives, i.e.
/// iff the table correction composed with the error is the identity.
///
/// Accumulation is serial in a fixed depth-first order (qubit 1 as the
/// outermost error digit, error indices ascending I,X,Y,Z at each level),
/// so results are bit-identical across runs. The enumeration path shares
/// nothing with the closed-form polynomials beyond the channel itself.
FidelityReport entanglement_fidelity_exact(const CodeSpec& code, const ChannelParams& params);

/// Published closed-form entanglement fidelity for the given code/regime.
/// Symmetric forms and the seven-qubit asymmetric form are polynomial
/// transcriptions in Horner form per mu-power, coefficients kept as exact
/// rationals (thirds) rendered to double at evaluation. The five-qubit
/// asymmetric case uses the published product expression (it equals the
/// symmetric value). Throws std::invalid_argument for the one combination
/// with no published closed form (seven_qubit_set1, asymmetric).
double closed_form(CodeName name, Regime regime, const ChannelParams& params);

/// Right-hand side of the Set-2 minus Set-1 difference identity,
/// mu * (2 p00^4 p10 p0 + 4 p00^3 p01 p10 p0), valid in the symmetric
/// regime; always >= 0.
double set_difference_identity(const ChannelParams& params);

/// Entanglement fidelity of a single unencoded qubit under the same
/// channel: 1 - p (X, Y, Z are traceless).
double unencoded_fidelity(const ChannelParams& params);

nlohmann::json to_json(const FidelityReport& report);

}  // namespace qec
