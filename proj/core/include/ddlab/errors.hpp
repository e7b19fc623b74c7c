#pragma once

#include <stdexcept>
#include <string>

namespace ddlab {

// Base of every error the library throws on purpose. Callers that only care
// about "numeric/domain trouble" can catch this one.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters or specs that violate a documented invariant (m <= 0, dt <= 0...).
class ParamError : public Error {
public:
    using Error::Error;
};

// A point lies outside the domain of the requested chart or formula.
class DomainError : public Error {
public:
    using Error::Error;
};

// Integrator produced a non-finite value or crossed the blow-up guard.
class StepError : public Error {
public:
    using Error::Error;
};

// Wigner grid too coarse or too narrow for the requested state.
class GridError : public Error {
public:
    using Error::Error;
};

// Grid refinement did not settle the requested eigenvalues.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Path pair whose first/last points disagree.
class EndpointError : public Error {
public:
    using Error::Error;
};

}  // namespace ddlab
