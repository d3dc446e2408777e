#pragma once

#include <stdexcept>
#include <string>

namespace logent {

/// Malformed input: bad dimensions, unnormalized vectors, unknown names.
class invalid_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The constraint set is empty for the requested parameters.
class no_solution : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A state with information above unity (negative logical entropy).
class inadmissible_state : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace logent
