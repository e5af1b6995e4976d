#include "maxprob/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace maxprob::numerics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double x, const char* fn) {
    if (!(x > 0.0)) {
        throw std::domain_error(std::string(fn) + ": argument must be positive, got " +
                                std::to_string(x));
    }
}

} // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    return std::lgamma(x);
}

double digamma(double x) {
    require_positive(x, "digamma");
    // Shift the argument above 10 via psi(x+1) = psi(x) + 1/x, then apply
    // the asymptotic expansion
    //   psi(y) = ln y - 1/(2y) - sum_k B_{2k} / (2k y^{2k}).
    // At y >= 10 the first omitted term (k = 7) is below 1e-15.
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double tail =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 -
                                        inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    return acc + std::log(x) - 0.5 * inv - tail;
}

SeriesTail digamma_series(double x, std::size_t terms) {
    require_positive(x, "digamma_series");
    if (terms == 0) {
        throw std::invalid_argument("digamma_series: at least one term required");
    }
    // Kahan-compensated partial sum of (1/(j+1) - 1/(j+x)).
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t j = 0; j < terms; ++j) {
        const double term = 1.0 / (static_cast<double>(j) + 1.0) -
                            1.0 / (static_cast<double>(j) + x);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // The summand is monotone in j, so the tail from j = J is bracketed by
    // the integral int_J^inf (1/(t+1) - 1/(t+x)) dt = ln((J+x)/(J+1)) up to
    // one term. Applying the integral as a correction leaves a residual no
    // larger than the first omitted term.
    const double J = static_cast<double>(terms);
    const double correction = std::log((J + x) / (J + 1.0));
    const double omitted = std::abs(1.0 / (J + 1.0) - 1.0 / (J + x));
    return SeriesTail{sum + correction, terms, 2.0 * omitted};
}

double stirling_log_factorial(long long n) {
    if (n < 1) {
        throw std::domain_error("stirling_log_factorial: n must be >= 1, got " +
                                std::to_string(n));
    }
    const double nn = static_cast<double>(n);
    return nn * std::log(nn) - nn + std::log(std::sqrt(2.0 * std::numbers::pi * nn)) +
           1.0 / (12.0 * nn);
}

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("log_sum_exp: empty sequence");
    }
    double mx = -kInf;
    for (double v : values) {
        mx = std::max(mx, v);
    }
    if (mx == -kInf) {
        return -kInf;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += std::exp(v - mx);
    }
    return mx + std::log(sum);
}

} // namespace maxprob::numerics
