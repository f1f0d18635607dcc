#pragma once

#include <stdexcept>
#include <string>

namespace fracgreen {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter outside the domain an operation is defined on.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// adaptive_quad called with a >= b.
class InvalidInterval : public DomainError {
public:
    explicit InvalidInterval(const std::string& msg) : DomainError(msg) {}
};

// No truncation point within the configured cutoff resolves the tail.
class TailNotResolved : public Error {
public:
    explicit TailNotResolved(const std::string& msg) : Error(msg) {}
};

// Power-series terms still growing when the term budget ran out.
class SeriesDiverging : public Error {
public:
    explicit SeriesDiverging(const std::string& msg) : Error(msg) {}
};

// Fourier truncation target not reachable within the term budget.
class TruncationFailure : public Error {
public:
    explicit TruncationFailure(const std::string& msg) : Error(msg) {}
};

// Evaluation requested at a point where the function is +infinity.
class SingularPoint : public DomainError {
public:
    explicit SingularPoint(const std::string& msg) : DomainError(msg) {}
};

// Integral representation requested where it does not converge (c >= c_alpha).
class ValidityViolation : public DomainError {
public:
    explicit ValidityViolation(const std::string& msg) : DomainError(msg) {}
};

// Root bracketing failed where a sign change was expected.
class BracketFailure : public Error {
public:
    explicit BracketFailure(const std::string& msg) : Error(msg) {}
};

// Two root curves never coexist (or never merge) on the sampled range.
class CurvesDisjoint : public Error {
public:
    explicit CurvesDisjoint(const std::string& msg) : Error(msg) {}
};

// Implicit equation has no root on the search interval.
class NoRoot : public Error {
public:
    explicit NoRoot(const std::string& msg) : Error(msg) {}
};

} // namespace fracgreen
