#include "qec/threshold.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qec/fidelity.hpp"
#include "qec/parallel.hpp"

namespace qec {

namespace {

double failure_minus_p(const CodeSpec& code, const Alphas& alphas, double mu, double p) {
    const ChannelParams params{p, mu, alphas};
    return entanglement_fidelity_exact(code, params).failure_probability - p;
}

/// Strict-interior classification for scans and bisections. On the mu = 1
/// line the failure probability equals p identically and roundoff decides
/// the bare comparison, so boundary points are rejected with a margin far
/// below the bisection tolerance.
bool effective_interior(const CodeSpec& code, const Alphas& alphas, double mu, double p) {
    return failure_minus_p(code, alphas, mu, p) < -1e-13;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i / (points - 1));
    }
    grid.back() = hi;
    return grid;
}

}  // namespace

bool is_effective(const CodeSpec& code, const ChannelParams& params) {
    return entanglement_fidelity_exact(code, params).failure_probability < params.p;
}

double p_threshold_at_mu(const CodeSpec& code, const Alphas& alphas, double mu) {
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("mu must be in [0,1]");
    // The effectiveness window opens at p -> 0+; scan for the outermost
    // effective point, then bisect the sign change above it.
    const std::vector<double> scan = log_grid(1e-6, 0.9, 64);
    int last_effective = -1;
    for (int i = 0; i < static_cast<int>(scan.size()); ++i) {
        if (effective_interior(code, alphas, mu, scan[static_cast<std::size_t>(i)])) {
            last_effective = i;
        }
    }
    if (last_effective < 0) return 0.0;
    double lo = scan[static_cast<std::size_t>(last_effective)];
    double hi = last_effective + 1 < static_cast<int>(scan.size())
                    ? scan[static_cast<std::size_t>(last_effective + 1)]
                    : 1.0;
    while (hi - lo > kBisectionTol) {
        const double mid = 0.5 * (lo + hi);
        if (effective_interior(code, alphas, mu, mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ThresholdCurve mu_threshold_curve(const CodeSpec& code, const Alphas& alphas,
                                  std::span<const double> p_grid) {
    for (std::size_t i = 0; i + 1 < p_grid.size(); ++i) {
        if (!(p_grid[i] < p_grid[i + 1])) {
            throw std::invalid_argument("p grid must be strictly increasing");
        }
    }
    if (!p_grid.empty() && !(p_grid.front() > 0.0 && p_grid.back() < 1.0)) {
        throw std::invalid_argument("p grid must lie in (0,1)");
    }
    ThresholdCurve curve;
    curve.code_name = code.name;
    curve.regime = ChannelParams{0.0, 0.0, alphas}.is_symmetric() ? "symmetric" : "asymmetric";
    curve.samples.resize(p_grid.size());
    parallel_for(p_grid.size(), [&](std::size_t i) {
        const double p = p_grid[i];
        // 64-point pre-scan along mu, keeping the outermost crossing.
        int last_effective = -1;
        constexpr int kScan = 64;
        for (int s = 0; s < kScan; ++s) {
            const double mu = static_cast<double>(s) / (kScan - 1);
            if (effective_interior(code, alphas, mu, p)) last_effective = s;
        }
        double threshold = 0.0;
        if (last_effective >= 0) {
            double lo = static_cast<double>(last_effective) / (kScan - 1);
            double hi = last_effective + 1 < kScan
                            ? static_cast<double>(last_effective + 1) / (kScan - 1)
                            : 1.0;
            if (last_effective == kScan - 1) {
                threshold = 1.0;
            } else {
                while (hi - lo > kBisectionTol) {
                    const double mid = 0.5 * (lo + hi);
                    if (effective_interior(code, alphas, mid, p)) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                threshold = 0.5 * (lo + hi);
            }
        }
        curve.samples[i] = {p, threshold};
    });
    for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i) {
        if (curve.samples[i + 1].second > curve.samples[i].second + kBisectionTol) {
            ++curve.monotonicity_flags;
        }
    }
    return curve;
}

double max_effective_mu(const CodeSpec& code, const Alphas& alphas) {
    // Near the closing point the effective window is anchored at p -> 0+,
    // so a log-spaced scan reaching 1e-6 resolves it reliably.
    const std::vector<double> scan = log_grid(1e-6, 0.5, 256);
    const auto any_effective = [&](double mu) {
        for (double p : scan) {
            if (effective_interior(code, alphas, mu, p)) return true;
        }
        return false;
    };
    if (!any_effective(0.0)) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > kBisectionTol) {
        const double mid = 0.5 * (lo + hi);
        if (any_effective(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<SweepRow> fidelity_sweep(const CodeSpec& code, const Alphas& alphas, double p,
                                     std::span<const double> mu_grid) {
    std::vector<SweepRow> rows(mu_grid.size());
    parallel_for(mu_grid.size(), [&](std::size_t i) {
        const ChannelParams params{p, mu_grid[i], alphas};
        rows[i] = {mu_grid[i], entanglement_fidelity_exact(code, params).fidelity_exact};
    });
    return rows;
}

std::vector<double> default_p_grid() {
    return log_grid(1e-4, 2e-1, 200);
}

namespace {

void write_g17(std::ostream& out, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out << buf;
}

}  // namespace

void write_threshold_csv(std::ostream& out, const ThresholdCurve& curve) {
    out << "# schema=1\n";
    out << "p,mu_threshold\n";
    for (const auto& [p, mu] : curve.samples) {
        write_g17(out, p);
        out << ',';
        write_g17(out, mu);
        out << '\n';
    }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << "# schema=1\n";
    out << "mu,fidelity\n";
    for (const auto& row : rows) {
        write_g17(out, row.mu);
        out << ',';
        write_g17(out, row.fidelity);
        out << '\n';
    }
}

}  // namespace qec
