#pragma once

#include "maxprob/enumerate.hpp"
#include "maxprob/model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace maxprob {

struct MaxProbResult {
    OccurrenceVector argmax;
    double log_prob = 0.0;
    /// Number of feasible vectors whose log-probability lies within the tie
    /// tolerance of the maximum; the reported argmax is the
    /// lexicographically smallest of them.
    std::uint64_t tie_count = 1;
    std::uint64_t j_scanned = 0;
};

struct ExpOcResult {
    /// Probability-weighted mean of the working set; sums to n.
    std::vector<double> mean;
    /// ln of the prior probability mass carried by the working set.
    double log_total_prob = 0.0;
    std::uint64_t j_scanned = 0;
};

struct RemResult {
    ProbabilityVector p_hat;
    /// One Lagrange multiplier per moment constraint, then the normalizer
    /// ln Z. For a boundary target attained only in the limit the
    /// divergent entries are reported as +/-inf.
    std::vector<double> multipliers;
    int iterations = 0;
    /// Maximum absolute moment violation of p_hat.
    double residual = 0.0;
};

struct WallisRecord {
    long long n = 0;
    OccurrenceVector rounded_vector;
    /// ln pi(rounded | q) / n.
    double normalized_log_prob = 0.0;
    /// H(p, q), the limit value.
    double target_entropy = 0.0;
    double gap = 0.0;
};

struct SolveOptions {
    /// Absolute log-domain tolerance within which scores count as tied.
    double tie_tolerance = 1e-9;
    /// Worker threads for enumeration scoring; partitions by the first
    /// coordinate. maxprob results are bit-identical for any worker count;
    /// expoc results agree within 1e-12.
    unsigned workers = 1;
    EnumerationBudget budget;
};

struct RemOptions {
    double tolerance = 1e-12;
    int max_iterations = 200;
};

/// ln of the multinomial probability of generating v from q:
/// log_gamma(n+1) - sum_i log_gamma(n_i+1) + sum_{n_i>0} n_i ln q_i.
/// Returns -inf iff v places counts on a zero-prior cell.
double log_multinomial_prob(const OccurrenceVector& v, const PriorGenerator& q);

/// The most probable occurrence vector of the working set under q.
/// Ties (within tie_tolerance in log domain) resolve to the
/// lexicographically smallest vector. Throws EmptyWorkingSet and
/// AllZeroProbability.
MaxProbResult maxprob(const WorkingSetSpec& spec, const PriorGenerator& q,
                      const SolveOptions& options = {});

/// The expected occurrence vector of the working set under q, computed
/// with log-domain weights normalized by log-sum-exp in two passes.
ExpOcResult expoc(const WorkingSetSpec& spec, const PriorGenerator& q,
                  const SolveOptions& options = {});

/// Maximizes the relative entropy H(p, q) over the probability simplex
/// subject to the moment constraints. The solution has the exponential
/// form p_i = q_i exp(sum_k lambda_k x_{k,i}) / Z on q's support and is
/// exactly zero elsewhere. Damped Newton on the dual, with a bracketing
/// bisection fallback for a single constraint. Throws InfeasibleMoment
/// and NoConvergence.
RemResult rem_solve(const PriorGenerator& q, const std::vector<MomentConstraint>& constraints,
                    const RemOptions& options = {});

/// Rounds n * p to an integer vector summing exactly to n by the
/// largest-remainder method (ties broken toward the lowest index).
OccurrenceVector round_to_occurrences(const ProbabilityVector& p, long long n);

/// Evaluates ln pi(round(n p) | q) / n against H(p, q) for each n,
/// tracing the Wallis-Jaynes limit. Requires p strictly positive on q's
/// support, zero elsewhere, and n_values strictly increasing.
std::vector<WallisRecord> wallis_limit_check(const PriorGenerator& q,
                                             const ProbabilityVector& p,
                                             std::span<const long long> n_values);

/// Norm of the projection of the asymptotic gradient
/// g_i = -ln(v_i / sum v) + ln q_i
/// onto the tangent space of the adding-up and moment constraints,
/// restricted to q's support. Near zero at the REM solution. Requires
/// v strictly positive on the support and zero elsewhere.
double stationarity_residual(std::span<const double> v, const PriorGenerator& q,
                             const std::vector<MomentConstraint>& constraints);
double stationarity_residual(const OccurrenceVector& v, const PriorGenerator& q,
                             const std::vector<MomentConstraint>& constraints);
double stationarity_residual(const ProbabilityVector& v, const PriorGenerator& q,
                             const std::vector<MomentConstraint>& constraints);

namespace detail {

/// Bisection on the strictly monotone dual mean function of a single
/// moment constraint; used as the fallback when Newton stalls. Exposed
/// for direct testing.
RemResult rem_solve_single_bisection(const PriorGenerator& q, const MomentConstraint& constraint,
                                     const RemOptions& options);

} // namespace detail

} // namespace maxprob
