#include "qec/channel.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qec {

ChannelParams ChannelParams::symmetric(double p, double mu) {
    ChannelParams params{p, mu, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
    params.validate();
    return params;
}

ChannelParams ChannelParams::asymmetric(double p, double mu, std::array<double, 3> alphas) {
    ChannelParams params{p, mu, alphas};
    params.validate();
    return params;
}

bool ChannelParams::is_symmetric(double tol) const {
    return std::abs(alphas[0] - 1.0 / 3.0) <= tol && std::abs(alphas[1] - 1.0 / 3.0) <= tol &&
           std::abs(alphas[2] - 1.0 / 3.0) <= tol;
}

void ChannelParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("error probability p must be in [0,1]");
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("memory degree mu must be in [0,1]");
    for (double a : alphas) {
        if (!(a >= 0.0)) throw std::invalid_argument("asymmetry weights must be nonnegative");
    }
    const double sum = alphas[0] + alphas[1] + alphas[2];
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("asymmetry weights must sum to 1");
    }
}

double single_prob(const ChannelParams& params, int k) {
    switch (k) {
        case kIdent: return 1.0 - params.p;
        case kFlipX: return params.alphas[0] * params.p;
        case kFlipY: return params.alphas[1] * params.p;
        case kFlipZ: return params.alphas[2] * params.p;
        default: throw std::invalid_argument("error index must be in 0..3");
    }
}

double conditional_prob(const ChannelParams& params, int k, int j) {
    if (j < 0 || j > 3) throw std::invalid_argument("error index must be in 0..3");
    return (1.0 - params.mu) * single_prob(params, k) + (k == j ? params.mu : 0.0);
}

double joint_prob(const ChannelParams& params, std::span<const std::uint8_t> indices) {
    if (indices.empty()) throw std::invalid_argument("index sequence must be nonempty");
    double prob = single_prob(params, indices[0]);
    for (std::size_t t = 1; t < indices.size(); ++t) {
        prob *= conditional_prob(params, indices[t], indices[t - 1]);
    }
    return prob;
}

PauliString pauli_from_indices(std::span<const std::uint8_t> indices) {
    PauliString e = PauliString::identity(static_cast<int>(indices.size()));
    for (std::size_t q = 0; q < indices.size(); ++q) {
        const std::uint8_t k = indices[q];
        if (k == kFlipX || k == kFlipY) e.a |= 1u << q;
        if (k == kFlipZ || k == kFlipY) e.b |= 1u << q;
    }
    return e;
}

std::vector<WeightedPauli> enumerate_distribution(const ChannelParams& params, int n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("qubit count must be positive");
    if (n > 10) {
        throw std::invalid_argument(
            "exact enumeration is capped at n = 10 (4^n strings); larger blocks need a sampling "
            "estimator, which this tool deliberately does not provide");
    }
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<WeightedPauli> dist;
    dist.reserve(count);
    std::vector<std::uint8_t> idx(static_cast<std::size_t>(n));
    for (std::size_t m = 0; m < count; ++m) {
        for (int q = 0; q < n; ++q) idx[static_cast<std::size_t>(q)] = (m >> (2 * q)) & 3u;
        dist.push_back(WeightedPauli{pauli_from_indices(idx), joint_prob(params, idx)});
    }
    return dist;
}

void write_distribution_csv(std::ostream& out, const std::vector<WeightedPauli>& dist) {
    out << "# schema=1\n";
    out << "pauli,probability\n";
    char buf[64];
    for (const auto& entry : dist) {
        std::snprintf(buf, sizeof(buf), "%.17g", entry.probability);
        out << to_string(entry.op) << ',' << buf << '\n';
    }
}

}  // namespace qec
