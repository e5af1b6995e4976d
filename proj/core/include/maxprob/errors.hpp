#pragma once

#include <stdexcept>
#include <string>

namespace maxprob {

/// Base class for all errors raised by this library that are not plain
/// argument/domain violations (those use the std exception types).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The working set contains no feasible occurrence vector. This is a
/// legitimate outcome (e.g. the scaled moment target is not reachable for
/// the given n), reported as a distinct signal rather than a crash.
class EmptyWorkingSet : public Error {
public:
    using Error::Error;
};

/// Enumeration or counting would exceed the configured resource budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A moment target lies outside the attainable interval of the constraint.
class InfeasibleMoment : public Error {
public:
    using Error::Error;
};

/// Every feasible occurrence vector has zero probability under the prior
/// (each one places mass on a zero-prior coordinate).
class AllZeroProbability : public Error {
public:
    using Error::Error;
};

/// Iterative solver failed to reach the requested tolerance. Carries the
/// best residual seen and the number of iterations spent.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, double best_residual, int iterations)
        : Error(what), best_residual(best_residual), iterations(iterations) {}

    double best_residual;
    int iterations;
};

} // namespace maxprob
