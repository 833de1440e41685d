#pragma once

#include <stdexcept>
#include <string>

namespace cpotts {

/// A denominator factor, pole or branch point was hit (|factor| below the
/// pole guard). Usually means the sampled parameters are ill-conditioned.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller supplied arguments outside an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rejection sampler or root finder gave up.
class SamplerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cpotts
