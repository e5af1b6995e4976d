#include "maxprob/enumerate.hpp"

#include "maxprob/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace maxprob {

namespace {

// Magnitude guard for the scaled-constraint arithmetic: every product and
// running sum in pruning/counting stays within |value| <= (m + 2) * kMaxScaled.
constexpr long long kMaxScaled = 1LL << 40;

long long checked_narrow(const BigInt& v, const char* what) {
    if (v > kMaxScaled || v < -kMaxScaled) {
        throw std::overflow_error(std::string("scaled constraint ") + what +
                                  " exceeds the supported magnitude: " + v.str());
    }
    return static_cast<long long>(v);
}

std::string describe(const ScaledConstraint& c) {
    std::ostringstream os;
    os << "sum(";
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        os << (i ? ", " : "") << c.a[i];
    }
    os << ") . n = " << c.b;
    return os.str();
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) {
        ++q;
    }
    return q;
}

// Constraints with degeneracy flags resolved: contradictory detected,
// redundant dropped.
struct PreparedSystem {
    std::vector<ScaledConstraint> all;
    std::vector<const ScaledConstraint*> effective;
    const ScaledConstraint* contradictory = nullptr;
};

PreparedSystem prepare(const WorkingSetSpec& spec) {
    PreparedSystem sys;
    sys.all = scale_constraints(spec);
    for (const ScaledConstraint& c : sys.all) {
        switch (c.degeneracy) {
        case Degeneracy::redundant:
            break;
        case Degeneracy::contradictory:
            if (sys.contradictory == nullptr) {
                sys.contradictory = &c;
            }
            break;
        case Degeneracy::none:
            sys.effective.push_back(&c);
            break;
        }
    }
    return sys;
}

// Per-depth extremes of the remaining coefficients, used both for DFS
// interval pruning and for DP residual bounds.
struct SuffixBounds {
    std::vector<std::vector<long long>> min_tail; // [constraint][depth]
    std::vector<std::vector<long long>> max_tail;
};

SuffixBounds suffix_bounds(const std::vector<const ScaledConstraint*>& cs, std::size_t m) {
    SuffixBounds sb;
    sb.min_tail.resize(cs.size());
    sb.max_tail.resize(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const auto& a = cs[k]->a;
        sb.min_tail[k].assign(m, 0);
        sb.max_tail[k].assign(m, 0);
        long long mn = a[m - 1];
        long long mx = a[m - 1];
        for (std::size_t d = m; d-- > 0;) {
            mn = std::min(mn, a[d]);
            mx = std::max(mx, a[d]);
            sb.min_tail[k][d] = mn;
            sb.max_tail[k][d] = mx;
        }
    }
    return sb;
}

// Depth-first assignment of n_1..n_{m-1}; the last coordinate is solved
// from the adding-up constraint and checked against every residual.
class DfsEnumerator {
public:
    DfsEnumerator(const WorkingSetSpec& spec, const PreparedSystem& sys,
                  const OccurrenceVisitor& visit)
        : m_(spec.m), cs_(sys.effective), sb_(suffix_bounds(cs_, spec.m)), visit_(visit),
          vec_(spec.m, 0), residual_(cs_.size(), 0) {
        for (std::size_t k = 0; k < cs_.size(); ++k) {
            residual_[k] = cs_[k]->b;
        }
    }

    void run(long long n, long long first_lo, long long first_hi) {
        first_lo_ = first_lo;
        first_hi_ = first_hi;
        descend(0, n);
    }

private:
    void descend(std::size_t depth, long long remaining) {
        if (depth == m_ - 1) {
            if (depth == 0 && (remaining < first_lo_ || remaining >= first_hi_)) {
                return;
            }
            for (std::size_t k = 0; k < cs_.size(); ++k) {
                if (residual_[k] != cs_[k]->a[depth] * remaining) {
                    return;
                }
            }
            vec_[depth] = remaining;
            visit_(std::span<const long long>(vec_.data(), m_));
            return;
        }
        long long lo = 0;
        long long hi = remaining;
        if (depth == 0) {
            lo = std::max(lo, first_lo_);
            hi = std::min(hi, first_hi_ - 1);
        }
        // Intersect with the feasible interval of each constraint: the
        // remaining coordinates can realize any residual in
        // [(remaining - c) * min_tail, (remaining - c) * max_tail].
        for (std::size_t k = 0; k < cs_.size() && lo <= hi; ++k) {
            const long long a = cs_[k]->a[depth];
            const long long mn = sb_.min_tail[k][depth + 1];
            const long long mx = sb_.max_tail[k][depth + 1];
            const long long r = residual_[k];
            // r - c*a >= (remaining - c)*mn  <=>  c*(a - mn) <= r - remaining*mn
            long long coef = a - mn;
            long long rhs = r - remaining * mn;
            if (coef > 0) {
                hi = std::min(hi, floor_div(rhs, coef));
            } else if (coef < 0) {
                lo = std::max(lo, ceil_div(rhs, coef));
            } else if (rhs < 0) {
                return;
            }
            // r - c*a <= (remaining - c)*mx  <=>  c*(a - mx) >= r - remaining*mx
            coef = a - mx;
            rhs = r - remaining * mx;
            if (coef < 0) {
                hi = std::min(hi, floor_div(rhs, coef));
            } else if (coef > 0) {
                lo = std::max(lo, ceil_div(rhs, coef));
            } else if (rhs > 0) {
                return;
            }
        }
        for (long long c = lo; c <= hi; ++c) {
            vec_[depth] = c;
            for (std::size_t k = 0; k < cs_.size(); ++k) {
                residual_[k] -= cs_[k]->a[depth] * c;
            }
            descend(depth + 1, remaining - c);
            for (std::size_t k = 0; k < cs_.size(); ++k) {
                residual_[k] += cs_[k]->a[depth] * c;
            }
        }
        vec_[depth] = 0;
    }

    std::size_t m_;
    const std::vector<const ScaledConstraint*>& cs_;
    SuffixBounds sb_;
    const OccurrenceVisitor& visit_;
    std::vector<long long> vec_;
    std::vector<long long> residual_;
    long long first_lo_ = 0;
    long long first_hi_ = 0;
};

} // namespace

std::vector<ScaledConstraint> scale_constraints(const WorkingSetSpec& spec) {
    validate(spec);
    std::vector<ScaledConstraint> out;
    out.reserve(spec.constraints.size());
    for (const MomentConstraint& mc : spec.constraints) {
        // Common scale: the lcm of all coefficient denominators and the
        // denominator of target * n, so both sides become integers ("b
        // absorbs the scaling").
        const Rational rhs = mc.target * spec.n;
        BigInt scale = boost::multiprecision::denominator(rhs);
        for (const Rational& x : mc.x) {
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
        }
        std::vector<BigInt> a(mc.x.size());
        for (std::size_t i = 0; i < mc.x.size(); ++i) {
            a[i] = boost::multiprecision::numerator(mc.x[i] * scale);
        }
        BigInt b = boost::multiprecision::numerator(rhs * scale);

        BigInt g = boost::multiprecision::abs(b);
        for (const BigInt& v : a) {
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
        }
        if (g > 1) {
            for (BigInt& v : a) {
                v /= g;
            }
            b /= g;
        }
        bool flip = false;
        for (const BigInt& v : a) {
            if (v != 0) {
                flip = v < 0;
                break;
            }
        }
        if (flip) {
            for (BigInt& v : a) {
                v = -v;
            }
            b = -b;
        }

        ScaledConstraint sc;
        sc.a.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            sc.a[i] = checked_narrow(a[i], "coefficient");
        }
        sc.b = checked_narrow(b, "target");
        if (spec.n > 0) {
            for (long long v : sc.a) {
                if (v != 0 && (kMaxScaled / spec.n) < std::abs(v)) {
                    throw std::overflow_error(
                        "scaled constraint coefficients too large for n = " +
                        std::to_string(spec.n));
                }
            }
        }
        const bool constant =
            std::all_of(sc.a.begin(), sc.a.end(), [&](long long v) { return v == sc.a[0]; });
        if (constant) {
            sc.degeneracy = (sc.b == sc.a[0] * spec.n) ? Degeneracy::redundant
                                                       : Degeneracy::contradictory;
        }
        out.push_back(std::move(sc));
    }
    return out;
}

WorkingSetStats count_working_set(const WorkingSetSpec& spec, const EnumerationBudget& budget) {
    const PreparedSystem sys = prepare(spec);
    WorkingSetStats stats;
    stats.n = spec.n;
    stats.m = spec.m;
    if (sys.contradictory != nullptr) {
        return stats;
    }
    const std::size_t m = spec.m;
    const long long n = spec.n;
    const std::size_t K = sys.effective.size();

    // Residual bounds per constraint over the whole recursion: any reachable
    // residual lies within the attainable range of a partial sum.
    std::vector<long long> lo(K), width(K);
    std::uint64_t layer = static_cast<std::uint64_t>(n) + 1;
    for (std::size_t k = 0; k < K; ++k) {
        const auto& a = sys.effective[k]->a;
        const long long mn = *std::min_element(a.begin(), a.end());
        const long long mx = *std::max_element(a.begin(), a.end());
        lo[k] = std::min<long long>(0, n * mn);
        const long long hi = std::max<long long>(0, n * mx);
        if (sys.effective[k]->b < lo[k] || sys.effective[k]->b > hi) {
            return stats; // target unreachable for any assignment
        }
        width[k] = hi - lo[k] + 1;
        if (width[k] > 0 &&
            layer > budget.max_dp_states / static_cast<std::uint64_t>(width[k])) {
            throw BudgetExceeded("count_working_set: DP state space exceeds " +
                                 std::to_string(budget.max_dp_states) + " states");
        }
        layer *= static_cast<std::uint64_t>(width[k]);
    }
    if (m > 0 && layer > budget.max_dp_states / m) {
        throw BudgetExceeded("count_working_set: DP state space exceeds " +
                             std::to_string(budget.max_dp_states) + " states");
    }

    // ways[t][r] over the flattened residual tuple r; strides[k] is the
    // step of one unit in residual k.
    std::uint64_t res_size = 1;
    std::vector<std::uint64_t> stride(K);
    for (std::size_t k = K; k-- > 0;) {
        stride[k] = res_size;
        res_size *= static_cast<std::uint64_t>(width[k]);
    }
    std::vector<std::uint64_t> ways(layer, 0);
    auto flat = [&](long long t, std::span<const long long> r) {
        std::uint64_t idx = static_cast<std::uint64_t>(t) * res_size;
        for (std::size_t k = 0; k < K; ++k) {
            idx += static_cast<std::uint64_t>(r[k] - lo[k]) * stride[k];
        }
        return idx;
    };

    // Initialize with the last item alone, then fold items m-2 .. 0 with
    // the unbounded-multiplicity recurrence
    //   ways_i(t, r) = ways_{i+1}(t, r) + ways_i(t-1, r - a_i),
    // updated in place with t ascending.
    std::vector<long long> r(K, 0);
    for (long long t = 0; t <= n; ++t) {
        bool ok = true;
        for (std::size_t k = 0; k < K && ok; ++k) {
            r[k] = sys.effective[k]->a[m - 1] * t;
            ok = r[k] >= lo[k] && r[k] < lo[k] + width[k];
        }
        if (ok) {
            ways[flat(t, r)] = 1;
        }
    }
    std::vector<long long> shift(K, 0);
    for (std::size_t item = m - 1; item-- > 0;) {
        for (std::size_t k = 0; k < K; ++k) {
            shift[k] = sys.effective[k]->a[item];
        }
        for (long long t = 1; t <= n; ++t) {
            // Odometer over the residual tuple of the (t-1) layer source.
            std::fill(r.begin(), r.end(), 0);
            for (std::uint64_t ri = 0; ri < res_size; ++ri) {
                bool in_range = true;
                std::uint64_t src = static_cast<std::uint64_t>(t - 1) * res_size;
                std::uint64_t dst = static_cast<std::uint64_t>(t) * res_size;
                for (std::size_t k = 0; k < K; ++k) {
                    const long long src_r = lo[k] + r[k];
                    const long long dst_r = src_r + shift[k];
                    if (dst_r < lo[k] || dst_r >= lo[k] + width[k]) {
                        in_range = false;
                        break;
                    }
                    src += static_cast<std::uint64_t>(r[k]) * stride[k];
                    dst += static_cast<std::uint64_t>(dst_r - lo[k]) * stride[k];
                }
                if (in_range && ways[src] != 0) {
                    if (__builtin_add_overflow(ways[dst], ways[src], &ways[dst])) {
                        throw BudgetExceeded("count_working_set: count overflows 64 bits");
                    }
                }
                for (std::size_t k = K; k-- > 0;) {
                    if (++r[k] < width[k]) {
                        break;
                    }
                    r[k] = 0;
                }
            }
        }
    }
    for (std::size_t k = 0; k < K; ++k) {
        r[k] = sys.effective[k]->b;
    }
    stats.j_count = ways[flat(n, r)];
    return stats;
}

void enumerate_working_set(const WorkingSetSpec& spec, const OccurrenceVisitor& visit,
                           const EnumerationBudget& budget) {
    if (spec.m > budget.max_m) {
        throw BudgetExceeded("enumerate_working_set: m = " + std::to_string(spec.m) +
                             " exceeds the enumeration budget of " +
                             std::to_string(budget.max_m));
    }
    const WorkingSetStats stats = count_working_set(spec, budget);
    if (stats.j_count == 0) {
        const PreparedSystem sys = prepare(spec);
        std::string detail;
        if (sys.contradictory != nullptr) {
            detail = "contradictory constraint " + describe(*sys.contradictory);
        } else {
            detail = "no occurrence vector satisfies";
            for (const ScaledConstraint& c : sys.all) {
                detail += " [" + describe(c) + "]";
            }
            if (sys.all.empty()) {
                detail += " the adding-up constraint";
            }
        }
        throw EmptyWorkingSet("working set is empty for n = " + std::to_string(spec.n) +
                              ": " + detail);
    }
    if (stats.j_count > budget.max_stream) {
        throw BudgetExceeded("enumerate_working_set: stream of " +
                             std::to_string(stats.j_count) + " vectors exceeds the budget of " +
                             std::to_string(budget.max_stream));
    }
    enumerate_working_set_partition(spec, {0, spec.n + 1}, visit, budget);
}

std::vector<OccurrenceVector> enumerate_working_set(const WorkingSetSpec& spec,
                                                    const EnumerationBudget& budget) {
    std::vector<OccurrenceVector> out;
    enumerate_working_set(
        spec,
        [&](std::span<const long long> v) {
            out.emplace_back(std::vector<long long>(v.begin(), v.end()));
        },
        budget);
    return out;
}

void enumerate_working_set_partition(const WorkingSetSpec& spec, FirstCoordinateRange range,
                                     const OccurrenceVisitor& visit,
                                     const EnumerationBudget& budget) {
    if (spec.m > budget.max_m) {
        throw BudgetExceeded("enumerate_working_set: m = " + std::to_string(spec.m) +
                             " exceeds the enumeration budget of " +
                             std::to_string(budget.max_m));
    }
    const PreparedSystem sys = prepare(spec);
    if (sys.contradictory != nullptr || range.lo >= range.hi) {
        return;
    }
    DfsEnumerator dfs(spec, sys, visit);
    dfs.run(spec.n, range.lo, range.hi);
}

} // namespace maxprob
