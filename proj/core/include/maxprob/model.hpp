#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace maxprob {

/// Exact rational number. Constraint coefficients and targets are kept
/// exact so that feasibility of integer occurrence vectors is decided
/// without floating-point comparisons.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses a plain decimal string ("3.2", "-0.25", "7") into an exact
/// rational (16/5, -1/4, 7). No exponent notation. Throws
/// std::invalid_argument on anything else.
Rational parse_decimal(std::string_view text);

/// Renders a rational whose denominator has only factors 2 and 5 as an
/// exact decimal string (the inverse of parse_decimal). Throws
/// std::domain_error for other denominators.
std::string to_decimal_string(const Rational& value);

/// An m-element pmf assumed to generate iid draws, hence occurrence
/// vectors, via the multinomial law. Entries may be zero; the support must
/// be nonempty. Inputs whose sum deviates from 1 by at most 1e-9 are
/// renormalized (flagged via renormalized()); larger deviations are
/// rejected.
class PriorGenerator {
public:
    explicit PriorGenerator(std::vector<double> weights);

    static PriorGenerator uniform(std::size_t m);

    std::size_t size() const noexcept { return q_.size(); }
    double operator[](std::size_t i) const { return q_[i]; }
    const std::vector<double>& values() const noexcept { return q_; }
    bool renormalized() const noexcept { return renormalized_; }

    /// Indices i with q_i > 0.
    const std::vector<std::size_t>& support() const noexcept { return support_; }

private:
    std::vector<double> q_;
    std::vector<std::size_t> support_;
    bool renormalized_ = false;
};

/// A probability vector: nonnegative entries summing to 1 within 1e-12.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> p);

    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& values() const noexcept { return p_; }

private:
    std::vector<double> p_;
};

/// A vector of absolute frequencies (n_1, ..., n_m), with the total
/// cached. The total may be zero (the empty-draw working set).
class OccurrenceVector {
public:
    explicit OccurrenceVector(std::vector<long long> counts);

    std::size_t size() const noexcept { return counts_.size(); }
    long long operator[](std::size_t i) const { return counts_[i]; }
    const std::vector<long long>& counts() const noexcept { return counts_; }
    long long total() const noexcept { return total_; }

    friend bool operator==(const OccurrenceVector&, const OccurrenceVector&) = default;

private:
    std::vector<long long> counts_;
    long long total_ = 0;
};

/// One moment consistency constraint: sum_i p_i x_i = target on the pmf
/// side, equivalently sum_i n_i x_i = target * n on occurrence vectors.
struct MomentConstraint {
    std::vector<Rational> x;
    Rational target;
};

/// Defines the working set H_n: all m-part occurrence vectors with total n
/// satisfying every moment constraint. The adding-up constraint
/// sum_i n_i = n is implicit and never listed in `constraints`.
struct WorkingSetSpec {
    std::size_t m = 0;
    long long n = 0;
    std::vector<MomentConstraint> constraints;
};

/// Throws std::invalid_argument if the spec is malformed (m == 0, n < 0,
/// or a constraint of the wrong dimension).
void validate(const WorkingSetSpec& spec);

/// Relative entropy H(p, q) = -sum_i p_i ln(p_i / q_i), with the
/// convention 0 ln 0 = 0. Returns -inf iff p places mass where q has
/// none. Always <= 0, with equality iff p = q on the support.
double relative_entropy(const ProbabilityVector& p, const PriorGenerator& q);

/// Shannon entropy H(p) = -sum_i p_i ln p_i, in [0, ln m].
double shannon_entropy(const ProbabilityVector& p);

/// The type vector n/n of an occurrence vector. Requires total() > 0.
ProbabilityVector frequency(const OccurrenceVector& v);

} // namespace maxprob
