#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>

namespace maxprob::numerics {

/// Euler-Mascheroni constant. Frozen from the harmonic-limit evaluation
/// H(N) - ln(N + 1/2) at N = 10^6 (see the series oracle in the test
/// suite, which re-derives it and checks this literal to 1e-12).
inline constexpr double kEulerGamma = 0.57721566490153286;

/// Truncated evaluation of the series g(x) = sum_{j>=0} (1/(j+1) - 1/(j+x)),
/// the infinite-series form of digamma(x) + Euler's constant.
struct SeriesTail {
    /// Partial sum over the first `terms_used` terms, with the closed-form
    /// integral tail correction ln((J+x)/(J+1)) already applied.
    double partial_sum;
    std::size_t terms_used;
    /// Absolute bound on the remaining truncation error: twice the
    /// magnitude of the first omitted term.
    double tail_bound;
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0. Small arguments are shifted above
/// 10 with psi(x+1) = psi(x) + 1/x, then an asymptotic expansion is used.
/// Throws std::domain_error for x <= 0.
double digamma(double x);

/// Direct truncated-series evaluation of g(x) (digamma(x) = g(x) - C).
/// Converges slowly; intended as a reference path for validating the fast
/// digamma, not for production use. Throws std::domain_error for x <= 0
/// and std::invalid_argument for terms == 0.
SeriesTail digamma_series(double x, std::size_t terms);

/// The four-term Stirling approximation of ln n!:
///   n ln n - n + ln sqrt(2 pi n) + 1/(12 n).
/// |result - log_gamma(n+1)| <= 1/(360 n^3). Throws std::domain_error
/// for n < 1.
double stirling_log_factorial(long long n);

/// ln sum_i exp(v_i), overflow/underflow safe. Returns -inf iff every
/// input is -inf. Throws std::invalid_argument on an empty sequence.
double log_sum_exp(std::span<const double> values);

inline double log_sum_exp(std::initializer_list<double> values) {
    return log_sum_exp(std::span<const double>(values.begin(), values.size()));
}

} // namespace maxprob::numerics
