#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qec/code.hpp"
#include "qec/pauli.hpp"

namespace qec {

/// Explicit state vector over n qubits. Basis-ket bit order: the leftmost
/// ket symbol is qubit 1 and maps to the highest-order index bit.
struct DenseState {
    int n = 0;
    std::vector<std::complex<double>> amps;
};

/// Amplitude of the basis ket written as a bit string, e.g. amp("11110").
std::complex<double> amplitude(const DenseState& state, std::string_view ket);

/// Applies the literal matrix of e (phase-exact, Y = iXZ with its imaginary
/// entries) to the state.
DenseState apply_pauli(const PauliString& e, const DenseState& state);

/// Logical codeword built from the published computational-basis expansion,
/// signs as printed. `logical` is 0 or 1. Both seven-qubit sets share the
/// same codewords.
DenseState build_codeword(CodeName name, int logical);

/// Generator basis consistent with the codeword amplitude conventions:
/// every element fixes both codewords with eigenvalue +1.
///
/// For the seven-qubit code this is the registry generator list. The
/// five-qubit amplitudes follow the cyclic convention whose stabilizer is
/// generated by the cyclic shifts of ZXXZI -- the X<->Z dual of the
/// registry's XZZXI family -- so the fixing check uses that dual basis.
std::vector<PauliString> codeword_stabilizer_basis(CodeName name);

struct FixingReport {
    bool pass = true;
    struct Entry {
        PauliString generator;
        int logical;
        double residual;  // max elementwise |g|psi> - |psi>|
    };
    std::vector<Entry> entries;
};

/// Verifies g|l> = |l> within 1e-12 elementwise for every generator in
/// codeword_stabilizer_basis and both logicals.
FixingReport check_stabilizer_fixing(CodeName name);

struct KlViolation {
    PauliString first, second;
    std::complex<double> off01, off10;  // <0|E_l E_m|1>, <1|E_l E_m|0>
    std::complex<double> diag0, diag1;  // <0|E_l E_m|0>, <1|E_l E_m|1>
};

struct KlReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::vector<KlViolation> violations;
};

/// Error-correction conditions over all ordered pairs (l, m) of the set:
/// off-diagonal overlaps must vanish and the two diagonal entries must be
/// equal, each within 1e-12. Every violating pair is reported with its
/// overlap values.
KlReport check_kl_conditions(CodeName name, std::span<const PauliString> set);

}  // namespace qec
