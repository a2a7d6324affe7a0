#ifndef RSUM_ERRORS_HPP
#define RSUM_ERRORS_HPP

#include <stdexcept>

namespace rsum {

/// Malformed or inconsistent input (bad modulus, mixed domains, parse failures).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (tuple count, state count, bitset size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsum

#endif  // RSUM_ERRORS_HPP
