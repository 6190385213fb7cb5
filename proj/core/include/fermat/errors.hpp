#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// All-zero coordinate vector, or a coordinate outside the supported range.
class InvalidPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Intersection product whose total degree does not match the dimension.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point that does not satisfy the defining equation of the bundle.
class NotOnVariety : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fermat
