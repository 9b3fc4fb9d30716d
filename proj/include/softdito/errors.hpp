#ifndef SOFTDITO_ERRORS_HPP
#define SOFTDITO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace softdito {

/// A label or parameter set that does not belong to the context.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A malformed argument: empty families, mismatched contexts, unknown tags.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration request that exceeds the configured budget.
class BoundsError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace softdito

#endif
