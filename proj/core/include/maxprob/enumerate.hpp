#pragma once

#include "maxprob/model.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace maxprob {

enum class Degeneracy {
    none,
    /// All coefficients equal and the target matches the adding-up
    /// constraint; the constraint carries no information and is dropped.
    redundant,
    /// All coefficients equal and the target conflicts with the adding-up
    /// constraint; the working set is empty.
    contradictory,
};

/// A moment constraint in integer-exact form: sum_i a_i n_i = b, with the
/// same solution set as the rational original. Canonical representation:
/// divided by the overall gcd of the a_i and b, leading nonzero
/// coefficient positive.
struct ScaledConstraint {
    std::vector<long long> a;
    long long b = 0;
    Degeneracy degeneracy = Degeneracy::none;
};

struct WorkingSetStats {
    std::uint64_t j_count = 0;
    long long n = 0;
    std::size_t m = 0;
};

struct EnumerationBudget {
    /// Maximum number of vectors enumerate_working_set may stream.
    std::uint64_t max_stream = 100'000'000;
    /// Maximum number of dynamic-programming states for counting.
    std::uint64_t max_dp_states = 1'000'000'000;
    /// Maximum dimension for enumeration.
    std::size_t max_m = 16;
};

/// Converts each rational constraint sum n_i x_i = target * n into the
/// integer-exact equation sum a_i n_i = b and canonicalizes it. Degenerate
/// (constant-coefficient) constraints are flagged, not dropped here.
std::vector<ScaledConstraint> scale_constraints(const WorkingSetSpec& spec);

/// Exact cardinality of the working set, computed by dynamic programming
/// over (remaining total, remaining constraint residuals) without
/// materializing vectors. Throws BudgetExceeded if the DP state space
/// exceeds the budget or the count overflows 64 bits.
WorkingSetStats count_working_set(const WorkingSetSpec& spec,
                                  const EnumerationBudget& budget = {});

using OccurrenceVisitor = std::function<void(std::span<const long long>)>;

/// Streams every feasible occurrence vector exactly once, in lexicographic
/// order. The span passed to the visitor is only valid during the call.
/// Throws EmptyWorkingSet when no vector is feasible and BudgetExceeded
/// when m or the projected stream size (estimated by counting first)
/// exceeds the budget.
void enumerate_working_set(const WorkingSetSpec& spec, const OccurrenceVisitor& visit,
                           const EnumerationBudget& budget = {});

/// Convenience form collecting the stream.
std::vector<OccurrenceVector> enumerate_working_set(const WorkingSetSpec& spec,
                                                    const EnumerationBudget& budget = {});

/// Half-open range of values for the first coordinate n_1.
struct FirstCoordinateRange {
    long long lo = 0;
    long long hi = 0;
};

/// Streams the sub-working-set whose first coordinate lies in `range`, in
/// lexicographic order. Partitions over disjoint ranges are independent
/// and their union (merged in range order) is the full stream. An empty
/// partition is not an error. No count pre-check is performed.
void enumerate_working_set_partition(const WorkingSetSpec& spec, FirstCoordinateRange range,
                                     const OccurrenceVisitor& visit,
                                     const EnumerationBudget& budget = {});

} // namespace maxprob
