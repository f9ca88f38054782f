#include "qec/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qec {

namespace {

constexpr double kTol = 1e-12;

std::uint32_t ket_index(int n, std::string_view ket) {
    if (static_cast<int>(ket.size()) != n) {
        throw std::invalid_argument("ket string length does not match qubit count");
    }
    std::uint32_t idx = 0;
    for (char c : ket) {
        idx = (idx << 1) | (c == '1' ? 1u : 0u);  // leftmost symbol = qubit 1 = MSB
    }
    return idx;
}

/// Maps a qubit mask (bit q-1 = qubit q) into index space, where qubit 1 is
/// the most significant of the n index bits.
std::uint32_t index_mask(int n, std::uint32_t qubit_mask) {
    std::uint32_t m = 0;
    for (int q = 1; q <= n; ++q) {
        if ((qubit_mask >> (q - 1)) & 1u) m |= 1u << (n - q);
    }
    return m;
}

DenseState superposition(int n, std::span<const std::string_view> plus,
                         std::span<const std::string_view> minus, double amp) {
    DenseState state{n, std::vector<std::complex<double>>(std::size_t{1} << n)};
    for (auto ket : plus) state.amps[ket_index(n, ket)] = amp;
    for (auto ket : minus) state.amps[ket_index(n, ket)] = -amp;
    return state;
}

constexpr std::string_view kFiveZeroPlus[] = {"00000", "11000", "01100", "00110", "00011", "10001"};
constexpr std::string_view kFiveZeroMinus[] = {"01010", "00101", "10010", "01001", "10100",
                                               "11110", "01111", "10111", "11011", "11101"};
constexpr std::string_view kFiveOnePlus[] = {"11111", "00111", "10011", "11001", "11100", "01110"};
constexpr std::string_view kFiveOneMinus[] = {"10101", "11010", "01101", "10110", "01011",
                                              "00001", "10000", "01000", "00100", "00010"};
constexpr std::string_view kSevenZero[] = {"0000000", "0110011", "1010101", "1100110",
                                           "0001111", "0111100", "1011010", "1101001"};
constexpr std::string_view kSevenOne[] = {"1111111", "1001100", "0101010", "0011001",
                                          "1110000", "1000011", "0100101", "0010110"};

constexpr std::string_view kFiveDenseBasis[] = {"Z1X2X3Z4", "Z2X3X4Z5", "Z1Z3X4X5", "X1Z2Z4X5"};
constexpr std::string_view kSevenDenseBasis[] = {"X4X5X6X7", "X2X3X6X7", "X1X3X5X7",
                                                 "Z4Z5Z6Z7", "Z2Z3Z6Z7", "Z1Z3Z5Z7"};

}  // namespace

std::complex<double> amplitude(const DenseState& state, std::string_view ket) {
    return state.amps[ket_index(state.n, ket)];
}

DenseState apply_pauli(const PauliString& e, const DenseState& state) {
    if (e.n != state.n) throw std::invalid_argument("length mismatch in apply_pauli");
    const int n = state.n;
    const std::uint32_t flip = index_mask(n, e.a);
    const std::uint32_t sign_mask = index_mask(n, e.b);
    // Y = iXZ on each doubly-marked qubit contributes one factor of i.
    static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> y_phase = kIPow[std::popcount(e.a & e.b) & 3];

    DenseState out{n, std::vector<std::complex<double>>(state.amps.size())};
    for (std::uint32_t idx = 0; idx < state.amps.size(); ++idx) {
        const std::complex<double>& amp = state.amps[idx];
        if (amp == std::complex<double>{}) continue;
        const double sign = (std::popcount(idx & sign_mask) & 1) ? -1.0 : 1.0;
        out.amps[idx ^ flip] = amp * y_phase * sign;
    }
    return out;
}

DenseState build_codeword(CodeName name, int logical) {
    if (logical != 0 && logical != 1) throw std::invalid_argument("logical must be 0 or 1");
    if (name == CodeName::five_qubit) {
        return logical == 0 ? superposition(5, kFiveZeroPlus, kFiveZeroMinus, 0.25)
                            : superposition(5, kFiveOnePlus, kFiveOneMinus, 0.25);
    }
    const double amp = 1.0 / (2.0 * std::sqrt(2.0));
    const std::span<const std::string_view> none;
    return logical == 0 ? superposition(7, kSevenZero, none, amp)
                        : superposition(7, kSevenOne, none, amp);
}

std::vector<PauliString> codeword_stabilizer_basis(CodeName name) {
    std::vector<PauliString> basis;
    if (name == CodeName::five_qubit) {
        for (auto nm : kFiveDenseBasis) basis.push_back(parse_pauli(5, nm));
    } else {
        for (auto nm : kSevenDenseBasis) basis.push_back(parse_pauli(7, nm));
    }
    return basis;
}

FixingReport check_stabilizer_fixing(CodeName name) {
    FixingReport report;
    const DenseState codewords[2] = {build_codeword(name, 0), build_codeword(name, 1)};
    for (const auto& g : codeword_stabilizer_basis(name)) {
        for (int logical = 0; logical < 2; ++logical) {
            const DenseState mapped = apply_pauli(g, codewords[logical]);
            double residual = 0.0;
            for (std::size_t i = 0; i < mapped.amps.size(); ++i) {
                residual = std::max(residual, std::abs(mapped.amps[i] - codewords[logical].amps[i]));
            }
            report.entries.push_back({g, logical, residual});
            if (residual > kTol) report.pass = false;
        }
    }
    return report;
}

KlReport check_kl_conditions(CodeName name, std::span<const PauliString> set) {
    KlReport report;
    const DenseState codewords[2] = {build_codeword(name, 0), build_codeword(name, 1)};

    // Cache E|0_L> and E|1_L> for every set element; all inner products are
    // then <i|E_l E_m|j> = <E_l i | E_m j> since the literal matrices are
    // Hermitian.
    std::vector<DenseState> img0, img1;
    img0.reserve(set.size());
    img1.reserve(set.size());
    for (const auto& e : set) {
        img0.push_back(apply_pauli(e, codewords[0]));
        img1.push_back(apply_pauli(e, codewords[1]));
    }

    auto inner = [](const DenseState& u, const DenseState& v) {
        std::complex<double> acc{};
        for (std::size_t i = 0; i < u.amps.size(); ++i) acc += std::conj(u.amps[i]) * v.amps[i];
        return acc;
    };

    for (std::size_t l = 0; l < set.size(); ++l) {
        for (std::size_t m = 0; m < set.size(); ++m) {
            ++report.pairs_checked;
            const std::complex<double> off01 = inner(img0[l], img1[m]);
            const std::complex<double> off10 = inner(img1[l], img0[m]);
            const std::complex<double> diag0 = inner(img0[l], img0[m]);
            const std::complex<double> diag1 = inner(img1[l], img1[m]);
            if (std::abs(off01) > kTol || std::abs(off10) > kTol ||
                std::abs(diag0 - diag1) > kTol) {
                report.pass = false;
                report.violations.push_back({set[l], set[m], off01, off10, diag0, diag1});
            }
        }
    }
    return report;
}

}  // namespace qec
