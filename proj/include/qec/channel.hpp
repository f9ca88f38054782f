#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qec/pauli.hpp"

namespace qec {

/// Single-qubit error indices, fixed throughout: 0 = I, 1 = X, 2 = Y, 3 = Z.
/// The Z-priority decoder tables depend on this ordering; never reorder.
enum ErrorIndex : std::uint8_t { kIdent = 0, kFlipX = 1, kFlipY = 2, kFlipZ = 3 };

/// Parameters of the Markov-correlated depolarizing channel.
///
/// Qubit 1 draws its error from the single-qubit distribution
///   P(I) = 1-p, P(X) = alpha_x*p, P(Y) = alpha_y*p, P(Z) = alpha_z*p,
/// and each later qubit is conditioned on its predecessor through
///   P(k | j) = (1-mu)*P(k) + mu*[k == j].
/// mu = 0 gives independent errors, mu = 1 perfectly correlated ones.
struct ChannelParams {
    double p = 0.0;
    double mu = 0.0;
    std::array<double, 3> alphas{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};  // (alpha_x, alpha_y, alpha_z)

    static ChannelParams symmetric(double p, double mu);
    static ChannelParams asymmetric(double p, double mu, std::array<double, 3> alphas);

    bool is_symmetric(double tol = 1e-12) const;

    /// Throws std::invalid_argument unless p, mu are in [0,1] and the alphas
    /// are nonnegative and sum to 1 within 1e-12.
    void validate() const;
};

/// Probability of error index k on the first (unconditioned) qubit.
double single_prob(const ChannelParams& params, int k);

/// Probability of error index k given the previous qubit suffered j.
double conditional_prob(const ChannelParams& params, int k, int j);

/// Chain probability of a full error-index sequence, qubit 1 first.
double joint_prob(const ChannelParams& params, std::span<const std::uint8_t> indices);

/// Maps an error-index sequence to the PauliString it applies.
PauliString pauli_from_indices(std::span<const std::uint8_t> indices);

struct WeightedPauli {
    PauliString op;
    double probability;
};

/// The full 4^n-entry distribution over n-qubit Pauli strings.
///
/// Entry m corresponds to the index sequence with qubit q suffering error
/// (m >> 2*(q-1)) & 3; this fixed ordering makes all downstream sums
/// deterministic. Exact enumeration only: n above 10 is refused.
std::vector<WeightedPauli> enumerate_distribution(const ChannelParams& params, int n);

/// Columns pauli,probability after a "# schema=1" header line.
void write_distribution_csv(std::ostream& out, const std::vector<WeightedPauli>& dist);

}  // namespace qec
