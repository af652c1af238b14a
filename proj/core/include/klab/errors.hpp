#pragma once

#include <stdexcept>
#include <string>

namespace klab {

/// Evaluation requested outside a field's declared domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Metric (or fitted system) is numerically singular.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation hit a singular locus (unit sphere, projective hyperplane, ...).
class SingularLocusError : public std::runtime_error {
public:
    explicit SingularLocusError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data unusable for a fit (too few points, rank deficient sample).
class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated precondition does not hold.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace klab
