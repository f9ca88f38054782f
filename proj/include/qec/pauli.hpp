#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace qec {

/// Phase-free n-qubit Pauli operator in the binary symplectic representation.
///
/// Bit q-1 of `a` is set iff sigma_x acts on qubit q; bit q-1 of `b` iff
/// sigma_z acts on qubit q. Y on qubit q sets both bits (Y = iXZ with the
/// global phase dropped; every quantity computed downstream -- syndromes,
/// weights, set membership -- is insensitive to it).
///
/// Qubit indices are 1-based externally, bit q-1 internally. n is capped at
/// 16 so each half fits comfortably in one 32-bit word.
struct PauliString {
    int n = 1;
    std::uint32_t a = 0;  // X-part
    std::uint32_t b = 0;  // Z-part

    static constexpr int kMaxQubits = 16;

    static PauliString identity(int n);

    /// Builds from (qubit, letter) pairs, e.g. {{1,'Z'},{4,'X'}} -> Z1X4.
    /// Throws std::invalid_argument on out-of-range or duplicate indices.
    static PauliString from_letters(int n, std::span<const std::pair<int, char>> letters);

    /// Builds directly from X/Z bit masks. Bits above n-1 must be zero.
    static PauliString from_xz(int n, std::uint32_t a, std::uint32_t b);

    bool is_identity() const { return a == 0 && b == 0; }

    /// Packs (a, b) into a single key, b in the high bits. Used as an index
    /// into tables of size 4^n.
    std::uint32_t key() const { return a | (b << n); }

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Group law in the phase quotient: componentwise XOR. Self-inverse.
PauliString multiply(const PauliString& lhs, const PauliString& rhs);

/// Number of qubits touched by X, Y or Z.
int weight(const PauliString& e);

/// Symplectic inner product <u,v> = u.a*v.b + u.b*v.a mod 2.
/// 0 iff the underlying Pauli operators commute.
int symplectic_product(const PauliString& u, const PauliString& v);

/// Renders as "Z1X4"-style text, qubits in ascending order; identity -> "I".
std::string to_string(const PauliString& e);

/// Parses the format produced by to_string. Throws std::invalid_argument.
PauliString parse_pauli(int n, std::string_view text);

}  // namespace qec
