#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qec/channel.hpp"
#include "qec/code.hpp"

namespace qec {

/// Alphas stand in for the regime everywhere in this module: the symmetric
/// case is (1/3, 1/3, 1/3).
using Alphas = std::array<double, 3>;

inline constexpr Alphas kSymmetricAlphas{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

inline constexpr double kBisectionTol = 1e-8;

struct ThresholdCurve {
    std::string code_name;
    std::string regime;
    std::vector<std::pair<double, double>> samples;  // (p, mu_threshold)
    double bisection_tol = kBisectionTol;
    /// Adjacent sample pairs where mu_threshold increased with p. Recorded
    /// for inspection, never treated as an error: monotonicity is observed
    /// on all known curves but not guaranteed.
    std::size_t monotonicity_flags = 0;
};

struct SweepRow {
    double mu;
    double fidelity;
};

/// The correction scheme pays off at (mu, p) iff the failure probability
/// 1 - F(mu, p) from the exact engine is below the unencoded error
/// probability p.
bool is_effective(const CodeSpec& code, const ChannelParams& params);

/// Largest p below which is_effective holds at fixed mu, located by
/// bisection on the boundary P(mu, p) = p to kBisectionTol. A 64-point
/// pre-scan guards against multiple crossings and keeps the outermost one.
/// Returns 0 when no effective p exists.
double p_threshold_at_mu(const CodeSpec& code, const Alphas& alphas, double mu);

/// Supremum mu for which is_effective holds, per grid point p. Grid points
/// are independent and evaluated by a deterministic parallel map.
ThresholdCurve mu_threshold_curve(const CodeSpec& code, const Alphas& alphas,
                                  std::span<const double> p_grid);

/// Largest mu for which any effective p exists (the closing point of the
/// effectiveness region).
double max_effective_mu(const CodeSpec& code, const Alphas& alphas);

/// Rows (mu, F_exact) at fixed p.
std::vector<SweepRow> fidelity_sweep(const CodeSpec& code, const Alphas& alphas, double p,
                                     std::span<const double> mu_grid);

/// 200 log-spaced points in [1e-4, 2e-1]; covers every cited threshold.
std::vector<double> default_p_grid();

/// Columns p,mu_threshold after the "# schema=1" header.
void write_threshold_csv(std::ostream& out, const ThresholdCurve& curve);

/// Columns mu,fidelity after the "# schema=1" header.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace qec
