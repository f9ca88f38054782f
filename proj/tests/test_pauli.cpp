#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qec/pauli.hpp"

using qec::PauliString;

namespace {

PauliString random_pauli(std::mt19937& rng, int n) {
    std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1);
    return PauliString::from_xz(n, bits(rng), bits(rng));
}

}  // namespace

TEST_CASE("multiply follows the phase-free group law") {
    const auto x1 = qec::parse_pauli(1, "X1");
    const auto z1 = qec::parse_pauli(1, "Z1");
    CHECK(qec::multiply(x1, z1) == qec::parse_pauli(1, "Y1"));

    CHECK(qec::multiply(qec::parse_pauli(2, "X1Z2"), qec::parse_pauli(2, "Z1X2")) ==
          qec::parse_pauli(2, "Y1Y2"));

    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = random_pauli(rng, 7);
        CHECK(qec::multiply(e, e).is_identity());
    }

    CHECK_THROWS_AS(qec::multiply(x1, qec::parse_pauli(2, "X1")), std::invalid_argument);
}

TEST_CASE("group axioms hold exhaustively at n = 3") {
    const int n = 3;
    std::vector<PauliString> all;
    for (std::uint32_t a = 0; a < 8; ++a) {
        for (std::uint32_t b = 0; b < 8; ++b) all.push_back(PauliString::from_xz(n, a, b));
    }
    const auto id = PauliString::identity(n);
    for (const auto& u : all) {
        CHECK(qec::multiply(u, id) == u);
        CHECK(qec::multiply(u, u) == id);
        for (const auto& v : all) {
            for (const auto& w : all) {
                CHECK(qec::multiply(qec::multiply(u, v), w) ==
                      qec::multiply(u, qec::multiply(v, w)));
            }
        }
    }
}

TEST_CASE("weight counts touched qubits") {
    CHECK(qec::weight(PauliString::identity(5)) == 0);
    CHECK(qec::weight(qec::parse_pauli(2, "X1Z2")) == 2);
    CHECK(qec::weight(qec::parse_pauli(7, "Y3")) == 1);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto u = random_pauli(rng, 9);
        const auto v = random_pauli(rng, 9);
        CHECK(qec::weight(qec::multiply(u, v)) <= qec::weight(u) + qec::weight(v));
    }
}

TEST_CASE("symplectic product detects anticommutation") {
    CHECK(qec::symplectic_product(qec::parse_pauli(1, "X1"), qec::parse_pauli(1, "Z1")) == 1);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = random_pauli(rng, 8);
        CHECK(qec::symplectic_product(e, e) == 0);
    }

    // The five-qubit generator family commutes pairwise.
    const char* gens[] = {"X1Z2Z3X4", "X2Z3Z4X5", "X1X3Z4Z5", "Z1X2X4Z5"};
    for (const char* a : gens) {
        for (const char* b : gens) {
            CHECK(qec::symplectic_product(qec::parse_pauli(5, a), qec::parse_pauli(5, b)) == 0);
        }
    }

    // Bilinearity: <uv, w> = <u, w> + <v, w> mod 2.
    for (int trial = 0; trial < 200; ++trial) {
        const auto u = random_pauli(rng, 6);
        const auto v = random_pauli(rng, 6);
        const auto w = random_pauli(rng, 6);
        CHECK(qec::symplectic_product(qec::multiply(u, v), w) ==
              (qec::symplectic_product(u, w) ^ qec::symplectic_product(v, w)));
    }
}

TEST_CASE("from_letters builds the documented bit layout") {
    {
        const std::pair<int, char> letters[] = {{1, 'X'}};
        const auto e = PauliString::from_letters(5, letters);
        CHECK(e.a == 1u);
        CHECK(e.b == 0u);
    }
    {
        const std::pair<int, char> letters[] = {{1, 'Z'}, {4, 'X'}};
        const auto e = PauliString::from_letters(7, letters);
        CHECK(qec::to_string(e) == "Z1X4");
        CHECK(e.a == 0b0001000u);
        CHECK(e.b == 0b0000001u);
    }
    {
        const std::pair<int, char> letters[] = {{2, 'Y'}};
        const auto e = PauliString::from_letters(5, letters);
        CHECK(e.a == 2u);
        CHECK(e.b == 2u);
    }
    {
        const std::pair<int, char> bad[] = {{6, 'X'}};
        CHECK_THROWS_AS(PauliString::from_letters(5, bad), std::invalid_argument);
    }
    {
        const std::pair<int, char> dup[] = {{2, 'X'}, {2, 'Z'}};
        CHECK_THROWS_AS(PauliString::from_letters(5, dup), std::invalid_argument);
    }
}

TEST_CASE("text round trip") {
    CHECK(qec::to_string(PauliString::identity(7)) == "I");
    CHECK(qec::parse_pauli(7, "I").is_identity());
    CHECK(qec::to_string(qec::parse_pauli(7, "Z1X4")) == "Z1X4");

    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto e = random_pauli(rng, 16);
        CHECK(qec::parse_pauli(16, qec::to_string(e)) == e);
    }

    CHECK_THROWS_AS(qec::parse_pauli(5, "Q1"), std::invalid_argument);
    CHECK_THROWS_AS(qec::parse_pauli(5, "X6"), std::invalid_argument);
    CHECK_THROWS_AS(qec::parse_pauli(5, "X1X1"), std::invalid_argument);
    CHECK_THROWS_AS(qec::parse_pauli(5, "X"), std::invalid_argument);
}
