#ifndef CHEEGER_ERRORS_HPP
#define CHEEGER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cheeger
{

/// Input that violates a structural contract (non-associative table,
/// asymmetric generating set, malformed file, ...).
class ValidationError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// An exact enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Numerical routine failed to converge.
class SolverError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace cheeger

#endif // CHEEGER_ERRORS_HPP
