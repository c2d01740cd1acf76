#pragma once

#include <stdexcept>
#include <string>

namespace pqbezier {

/// Argument outside the mathematical domain of an operation (t outside [0,1],
/// q >= p where q/p < 1 is required, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An intermediate quantity left the finite double range. Callers are expected
/// to fall back to a normalized (recurrence) evaluation path.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Geometrically degenerate input (degree-0 curve asked for a tangent, all
/// control points on the probe line, ...).
class DegenerateError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace pqbezier
