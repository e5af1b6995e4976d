#include "maxprob/model.hpp"

#include "maxprob/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace maxprob {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void bad_decimal(std::string_view text) {
    throw std::invalid_argument("not a decimal string: \"" + std::string(text) + "\"");
}

} // namespace

Rational parse_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    BigInt digits = 0;
    std::size_t int_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits = digits * 10 + (text[pos] - '0');
        ++int_digits;
        ++pos;
    }
    std::size_t frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits = digits * 10 + (text[pos] - '0');
            ++frac_digits;
            ++pos;
        }
    }
    if (pos != text.size() || int_digits + frac_digits == 0) {
        bad_decimal(text);
    }
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_digits; ++i) {
        den *= 10;
    }
    Rational value(digits, den);
    return negative ? -value : value;
}

std::string to_decimal_string(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    // Strip factors of 2 and 5; anything left means no finite expansion.
    BigInt d = den;
    std::size_t twos = 0;
    std::size_t fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        throw std::domain_error("rational " + value.str() +
                                " has no finite decimal expansion");
    }
    const std::size_t k = std::max(twos, fives);
    for (std::size_t i = fives; i < k; ++i) {
        num *= 5;
    }
    for (std::size_t i = twos; i < k; ++i) {
        num *= 2;
    }
    std::string body = num.str();
    if (body.size() <= k) {
        body.insert(0, k - body.size() + 1, '0');
    }
    if (k > 0) {
        body.insert(body.size() - k, ".");
    }
    return negative ? "-" + body : body;
}

PriorGenerator::PriorGenerator(std::vector<double> weights) : q_(std::move(weights)) {
    if (q_.empty()) {
        throw std::invalid_argument("prior generator must have at least one cell");
    }
    double sum = 0.0;
    for (double w : q_) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("prior generator entries must be nonnegative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("prior generator entries sum to " + std::to_string(sum) +
                                    ", not 1");
    }
    if (sum != 1.0) {
        for (double& w : q_) {
            w /= sum;
        }
        renormalized_ = true;
    }
    for (std::size_t i = 0; i < q_.size(); ++i) {
        if (q_[i] > 0.0) {
            support_.push_back(i);
        }
    }
    if (support_.empty()) {
        throw std::invalid_argument("prior generator has empty support");
    }
}

PriorGenerator PriorGenerator::uniform(std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("uniform prior needs m >= 1");
    }
    return PriorGenerator(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw std::invalid_argument("probability vector must have at least one entry");
    }
    double sum = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument("probability vector entries must be nonnegative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("probability vector sums to " + std::to_string(sum) +
                                    ", not 1");
    }
}

OccurrenceVector::OccurrenceVector(std::vector<long long> counts)
    : counts_(std::move(counts)) {
    if (counts_.empty()) {
        throw std::invalid_argument("occurrence vector must have at least one cell");
    }
    for (long long c : counts_) {
        if (c < 0) {
            throw std::invalid_argument("occurrence vector entries must be nonnegative");
        }
        total_ += c;
    }
}

void validate(const WorkingSetSpec& spec) {
    if (spec.m == 0) {
        throw std::invalid_argument("working set needs m >= 1");
    }
    if (spec.n < 0) {
        throw std::invalid_argument("working set needs n >= 0");
    }
    for (const MomentConstraint& c : spec.constraints) {
        if (c.x.size() != spec.m) {
            throw std::invalid_argument("moment constraint has " +
                                        std::to_string(c.x.size()) + " coefficients, expected " +
                                        std::to_string(spec.m));
        }
    }
}

double relative_entropy(const ProbabilityVector& p, const PriorGenerator& q) {
    if (p.size() != q.size()) {
        throw DimensionMismatch("relative_entropy: p has dimension " +
                                std::to_string(p.size()) + ", q has " +
                                std::to_string(q.size()));
    }
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        if (q[i] == 0.0) {
            return -kInf;
        }
        h += p[i] * std::log(q[i] / p[i]);
    }
    return h;
}

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            h -= p[i] * std::log(p[i]);
        }
    }
    return h;
}

ProbabilityVector frequency(const OccurrenceVector& v) {
    if (v.total() <= 0) {
        throw std::domain_error("frequency: occurrence vector has zero total");
    }
    std::vector<double> p(v.size());
    const double n = static_cast<double>(v.total());
    for (std::size_t i = 0; i < v.size(); ++i) {
        p[i] = static_cast<double>(v[i]) / n;
    }
    return ProbabilityVector(std::move(p));
}

} // namespace maxprob
