#pragma once

#include <stdexcept>
#include <string>

namespace chebdisc {

// Bad arguments: out-of-range n/N, malformed x, missing inputs.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A formula evaluated outside the set where it is defined (pole, log of zero).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Root bracketing or bisection did not converge.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters fall in a band where no expansion is claimed (transition zone,
// fixed-x formula at large x, a > 1/2 for the mapping solver).
class RegimeRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chebdisc
