#pragma once

#include <stdexcept>
#include <string>

namespace hwcm {

/// Raised for out-of-range mode indices, mismatched lattices and invalid parameters.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Root finder was handed an interval without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coincident eigenvalues or vanishing denominators in the projection pipeline.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Time stepping failed (step underflow, non-finite state, ...).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hwcm
