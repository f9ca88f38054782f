#include "qec/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace qec {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > PauliString::kMaxQubits) {
        throw std::invalid_argument("qubit count must be in 1..16, got " + std::to_string(n));
    }
}

}  // namespace

PauliString PauliString::identity(int n) {
    check_qubit_count(n);
    return PauliString{n, 0, 0};
}

PauliString PauliString::from_xz(int n, std::uint32_t a, std::uint32_t b) {
    check_qubit_count(n);
    const std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1u);
    if ((a & ~mask) != 0 || (b & ~mask) != 0) {
        throw std::invalid_argument("X/Z masks have bits above qubit " + std::to_string(n));
    }
    return PauliString{n, a, b};
}

PauliString PauliString::from_letters(int n, std::span<const std::pair<int, char>> letters) {
    check_qubit_count(n);
    PauliString e{n, 0, 0};
    std::uint32_t seen = 0;
    for (const auto& [qubit, letter] : letters) {
        if (qubit < 1 || qubit > n) {
            throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                        " out of range 1.." + std::to_string(n));
        }
        const std::uint32_t bit = 1u << (qubit - 1);
        if (seen & bit) {
            throw std::invalid_argument("duplicate qubit index " + std::to_string(qubit));
        }
        seen |= bit;
        switch (letter) {
            case 'X': e.a |= bit; break;
            case 'Z': e.b |= bit; break;
            case 'Y': e.a |= bit; e.b |= bit; break;
            case 'I': break;
            default:
                throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
        }
    }
    return e;
}

PauliString multiply(const PauliString& lhs, const PauliString& rhs) {
    if (lhs.n != rhs.n) {
        throw std::invalid_argument("length mismatch in Pauli multiply: " +
                                    std::to_string(lhs.n) + " vs " + std::to_string(rhs.n));
    }
    return PauliString{lhs.n, lhs.a ^ rhs.a, lhs.b ^ rhs.b};
}

int weight(const PauliString& e) {
    return std::popcount(e.a | e.b);
}

int symplectic_product(const PauliString& u, const PauliString& v) {
    if (u.n != v.n) {
        throw std::invalid_argument("length mismatch in symplectic product");
    }
    return (std::popcount(u.a & v.b) ^ std::popcount(u.b & v.a)) & 1;
}

std::string to_string(const PauliString& e) {
    std::string out;
    for (int q = 1; q <= e.n; ++q) {
        const bool x = (e.a >> (q - 1)) & 1u;
        const bool z = (e.b >> (q - 1)) & 1u;
        if (!x && !z) continue;
        out += x ? (z ? 'Y' : 'X') : 'Z';
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

PauliString parse_pauli(int n, std::string_view text) {
    check_qubit_count(n);
    if (text == "I") return PauliString::identity(n);
    PauliString e{n, 0, 0};
    std::uint32_t seen = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        const char letter = text[i++];
        if (letter != 'X' && letter != 'Y' && letter != 'Z') {
            throw std::invalid_argument("bad Pauli letter in \"" + std::string(text) + "\"");
        }
        int qubit = 0;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            qubit = qubit * 10 + (text[i] - '0');
            ++i;
            ++digits;
        }
        if (digits == 0 || qubit < 1 || qubit > n) {
            throw std::invalid_argument("bad qubit index in \"" + std::string(text) + "\"");
        }
        const std::uint32_t bit = 1u << (qubit - 1);
        if (seen & bit) {
            throw std::invalid_argument("duplicate qubit in \"" + std::string(text) + "\"");
        }
        seen |= bit;
        if (letter != 'Z') e.a |= bit;
        if (letter != 'X') e.b |= bit;
    }
    return e;
}

}  // namespace qec
