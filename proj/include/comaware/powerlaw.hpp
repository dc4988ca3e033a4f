#ifndef COMAWARE_POWERLAW_HPP
#define COMAWARE_POWERLAW_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace comaware {

/// Hurwitz zeta: sum_{i>=0} (q + i)^-s for s > 1, q > 0.
///
/// Direct sum of the first terms followed by the Euler-Maclaurin tail
/// (integral term, half-term and Bernoulli corrections through B_16).
inline double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0)) {
        throw std::invalid_argument("hurwitz_zeta: exponent must exceed 1");
    }
    if (!(q > 0.0)) {
        throw std::invalid_argument("hurwitz_zeta: offset must be positive");
    }
    constexpr int kDirect = 16;
    // B_{2j} / (2j)!
    constexpr std::array<double, 8> kCoeff{
        1.0 / 6.0 / 2.0,
        -1.0 / 30.0 / 24.0,
        1.0 / 42.0 / 720.0,
        -1.0 / 30.0 / 40320.0,
        5.0 / 66.0 / 3628800.0,
        -691.0 / 2730.0 / 479001600.0,
        7.0 / 6.0 / 87178291200.0,
        -3617.0 / 510.0 / 20922789888000.0,
    };
    double sum = 0.0;
    for (int i = 0; i < kDirect; ++i) {
        sum += std::pow(q + i, -s);
    }
    const double x = q + kDirect;
    sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
    // rising factorial s (s+1) ... (s+2j-2) times x^(-s-2j+1)
    double factor = s * std::pow(x, -s - 1.0);
    for (std::size_t j = 0; j < kCoeff.size(); ++j) {
        sum += kCoeff[j] * factor;
        const double a = s + 2.0 * static_cast<double>(j) + 1.0;
        factor *= a * (a + 1.0) / (x * x);
    }
    return sum;
}

enum class PowerLawEstimator {
    /// Discrete MLE: maximise -n ln zeta(a, xmin) - a sum ln x.
    Discrete,
    /// Continuous MLE with finite-size correction: 1 + (n - 1) / sum ln(x / xmin).
    ContinuousCorrected,
};

inline const char* to_string(PowerLawEstimator e) {
    return e == PowerLawEstimator::Discrete ? "discrete" : "continuous";
}

struct PowerLawFit {
    double alpha = 0.0;
    std::size_t xmin = 0;
    std::size_t n_tail = 0;
    double log_likelihood = 0.0;
    bool degenerate = false; // optimum clamped to a search boundary
    PowerLawEstimator estimator = PowerLawEstimator::Discrete;
};

inline constexpr double kAlphaLower = 1.01;
inline constexpr double kAlphaUpper = 6.0;

struct TailSummary {
    std::size_t n = 0;
    double sum_log = 0.0; // sum ln x over the tail
};

inline TailSummary tail_summary(std::span<const std::size_t> values, std::size_t xmin) {
    if (xmin < 1) {
        throw std::invalid_argument("power-law fit: xmin must be at least 1");
    }
    TailSummary t;
    for (std::size_t x : values) {
        if (x >= xmin) {
            ++t.n;
            t.sum_log += std::log(static_cast<double>(x));
        }
    }
    if (t.n < 2) {
        throw InsufficientDataError("power-law fit: need at least 2 values >= xmin=" + std::to_string(xmin) +
                                    " (got " + std::to_string(t.n) + ")");
    }
    return t;
}

inline double discrete_log_likelihood(double alpha, const TailSummary& t, std::size_t xmin) {
    return -static_cast<double>(t.n) * std::log(hurwitz_zeta(alpha, static_cast<double>(xmin))) -
           alpha * t.sum_log;
}

/// Discrete power-law MLE with a fixed lower bound. The likelihood is
/// concave in alpha, so a golden-section search over [1.01, 6] to 1e-4
/// finds the maximum.
inline PowerLawFit fit_power_law(std::span<const std::size_t> values, std::size_t xmin) {
    const TailSummary t = tail_summary(values, xmin);
    const auto ll = [&](double a) { return discrete_log_likelihood(a, t, xmin); };

    constexpr double kTol = 1e-4;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = kAlphaLower;
    double hi = kAlphaUpper;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = ll(x1);
    double f2 = ll(x2);
    while (hi - lo > kTol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = ll(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = ll(x1);
        }
    }

    PowerLawFit fit;
    fit.alpha = 0.5 * (lo + hi);
    fit.degenerate = fit.alpha - kAlphaLower < 10 * kTol || kAlphaUpper - fit.alpha < 10 * kTol;
    if (fit.degenerate) {
        fit.alpha = fit.alpha - kAlphaLower < kAlphaUpper - fit.alpha ? kAlphaLower : kAlphaUpper;
    }
    fit.xmin = xmin;
    fit.n_tail = t.n;
    fit.log_likelihood = ll(fit.alpha);
    fit.estimator = PowerLawEstimator::Discrete;
    return fit;
}

/// Closed-form continuous MLE, bias-corrected for finite samples. Matches
/// the exponent reported by igraph/plfit for the continuous model.
inline PowerLawFit fit_power_law_continuous(std::span<const std::size_t> values, std::size_t xmin) {
    const TailSummary t = tail_summary(values, xmin);
    const double n = static_cast<double>(t.n);
    const double log_ratio = t.sum_log - n * std::log(static_cast<double>(xmin));

    PowerLawFit fit;
    fit.xmin = xmin;
    fit.n_tail = t.n;
    fit.estimator = PowerLawEstimator::ContinuousCorrected;
    fit.alpha = log_ratio > 0.0 ? 1.0 + (n - 1.0) / log_ratio : kAlphaUpper;
    if (log_ratio <= 0.0 || fit.alpha > kAlphaUpper || fit.alpha < kAlphaLower) {
        fit.alpha = std::clamp(fit.alpha, kAlphaLower, kAlphaUpper);
        fit.degenerate = true;
    }
    fit.log_likelihood =
        n * std::log((fit.alpha - 1.0) / static_cast<double>(xmin)) - fit.alpha * log_ratio;
    return fit;
}

inline PowerLawFit fit_power_law(std::span<const std::size_t> values, std::size_t xmin, PowerLawEstimator e) {
    return e == PowerLawEstimator::Discrete ? fit_power_law(values, xmin)
                                            : fit_power_law_continuous(values, xmin);
}

} // namespace comaware

#endif // COMAWARE_POWERLAW_HPP
