#pragma once

#include <stdexcept>

namespace cf {

// Precondition or domain violation on otherwise well-formed values.
// The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, sequence grammar). Also exit code 1;
// exit code 2 is reserved for argv-level usage errors.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cf
